#pragma once

// Floating-point cross-checks for the exact layer.  A chart carries residue
// exponents alpha_i and a polynomial h; the developing coordinate is
//
//   z^log = exp(h(z)) * prod r_i^{alpha_i} * exp(i sum alpha_i theta_i),
//
// single-valued on the universal cover (theta real, not mod 2pi).  Probes
// differentiate it numerically, continue it around meridians, sample linear
// torus orbits and walk word balls of the group, so every structural claim
// of the exact reports has an independent numeric shadow.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "cstar/intlinalg.hpp"
#include "cstar/quad.hpp"

namespace cstar {

using Cplx = std::complex<double>;

inline double embed(const QuadReal& x) { return x.toDouble(); }
inline Cplx embed(const QuadComplex& z) { return {z.re.toDouble(), z.im.toDouble()}; }

struct Monomial {
  Cplx coeff;
  std::vector<int> exps;  // one exponent per variable
};

// sparse polynomial in l complex variables
struct Poly {
  Index nvars = 0;
  std::vector<Monomial> terms;

  Cplx eval(const std::vector<Cplx>& z) const;
  Cplx partial(Index var, const std::vector<Cplx>& z) const;
};

struct NumericChart {
  Index ell = 0;
  std::vector<Cplx> alpha;
  Poly h;  // defaults to 0
};

NumericChart chartFrom(const std::vector<QuadComplex>& residues);

Cplx evalZlog(const NumericChart& c, const std::vector<double>& r,
              const std::vector<double>& theta);

// Max abs deviation between central finite differences of log z^log (in each
// r_i and theta_i direction) and the closed-form derivative.
double logderivResidual(const NumericChart& c, const std::vector<double>& r,
                        const std::vector<double>& theta, double step);

// Least-squares slope of log|z^log| against log r_i along a radial segment
// (other coordinates frozen at r=1, theta=0).  Equals Re(alpha_i) when h = 0.
double radialSlopeProbe(const NumericChart& c, Index i, int samples);

// Branch-tracked continuation of z^log along theta_i from 0 to 2*pi; the
// result is the meridian multiplier exp(2 pi i alpha_i) up to rounding.
Cplx meridianMultiplierProbe(const NumericChart& c, Index i, int steps);

// --- linear torus orbits -------------------------------------------------------

// Points k * w / subdiv on the universal cover of T^l (stored unwrapped so
// subtorus coordinates stay consistent); wrap with frac() for display.
struct OrbitSample {
  Eigen::MatrixXd raw;  // points x l
  std::uint64_t seed = 0;
};

OrbitSample sampleTorusOrbit(const Eigen::VectorXd& w, int points, int subdiv);

// min over k >= 1 of the toroidal distance between p_k and p_0
double orbitMinReturn(const OrbitSample& s);

// Fraction of occupied bins in the subtorus spanned by the (saturated) basis
// rows; pass the identity to measure coverage of the full torus.
double orbitCoverage(const OrbitSample& s, const IntMatrix& subtorusBasis, int binsPerDim);

// Integer basis of the smallest rational subtorus containing direction v —
// the closure of the line R*v in T^l.
IntMatrix orbitClosureBasis(const QuadVector& v);

// --- group orbit probe ----------------------------------------------------------

struct GammaOrbitStats {
  double minDistToOne = -1.0;  // over words != 1; negative if no such word
  double minLogAbs = -1.0;     // over words off the unit circle; negative if none
  bool offCircleWord = false;
  bool accumulationFlag = false;
  long wordsVisited = 0;
};

// Walks all exponent vectors in [-radius, radius]^n.  The accumulation flag
// fires on any word off the unit circle (an element of modulus != 1 already
// accumulates at 0 or infinity) or on a non-identity word closer to 1 than
// the circle threshold below.
GammaOrbitStats gammaOrbitProbe(const std::vector<Cplx>& gens, int radius);

// log-modulus below this is "on the circle"; distance-to-one below the second
// value flags circle accumulation.  0.3 separates the densest stock torsion
// groups (mu_N, N <= 12: min distance 2 sin(pi/12) ~ 0.52) from the stock
// irrational rotations at radius 20 (~0.18).
inline constexpr double kCircleTolerance = 1e-9;
inline constexpr double kAccumulationDistance = 0.3;

}  // namespace cstar
