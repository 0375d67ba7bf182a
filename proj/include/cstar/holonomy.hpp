#pragma once

// Multiplicative subgroups of C^* generated by exponents.  A group element
// exp(2*pi*i*w) is stored through its exponent w in Q(sqrt(d)) + i*Q(sqrt(d));
// the defining representation is
//
//     0 -> L -> Z^n -> Gamma -> 0,   L = { v : sum_j v_j w_j in Z },
//
// and everything downstream (endomorphisms, torsion, regime) is read off
// from the relation lattice L and the exponent geometry.

#include <optional>
#include <string>
#include <vector>

#include "cstar/intlinalg.hpp"
#include "cstar/quad.hpp"

namespace cstar {

// Exponent of a point of C^*, canonical modulo Z: the rational part of Re(w)
// lies in [0, 1).  |element| = exp(-2*pi*Im(w)), so Im > 0 means modulus < 1.
struct LogPoint {
  QuadComplex omega;

  bool operator==(const LogPoint& o) const { return omega == o.omega; }
};

LogPoint normalizeLog(const QuadComplex& w);

inline LogPoint logMul(const LogPoint& x, const LogPoint& y) {
  return normalizeLog(x.omega + y.omega);
}
inline LogPoint logInv(const LogPoint& x) { return normalizeLog(-x.omega); }
LogPoint logPow(const LogPoint& x, const Int& n);

// Coordinates of an exponent in the Q-basis {1, sqrt(d), i, i*sqrt(d)}.
RatVector coords4(const QuadComplex& w);

struct GammaModel {
  FieldContext field;
  std::vector<LogPoint> gens;  // residue generators first, then periods
  Index residueCount = 0;
  Lattice relations;
  QuotientInvariants invariants;  // structure of Z^n / L, i.e. of Gamma

  Index n() const { return static_cast<Index>(gens.size()); }
};

GammaModel makeGamma(const FieldContext& field, const std::vector<QuadComplex>& residues,
                     const std::vector<QuadComplex>& periods);

// L = { v in Z^n : sum v_j w_j in Z } for the given exponents.
Lattice relationLattice(const FieldContext& field, const std::vector<LogPoint>& gens);

// Membership of exp(2*pi*i*w) in Gamma: w in Z + sum_j Z*w_j.
bool gammaContains(const GammaModel& G, const QuadComplex& w);

enum class RegimeKind {
  Trivial,      // Gamma = 1
  TorsionMuN,   // finite, = mu_N with N >= 2
  ProperCyclic, // mu_N x q^Z with |q| != 1: discrete, closed, Hausdorff quotient
  UnitaryWild,  // infinite subgroup of the circle, dense in S^1
  RadialWild,   // radial rank >= 2, moduli alone already accumulate
  MixedWild,    // radial rank 1 with infinite circle part
};

const char* regimeName(RegimeKind k);

struct Regime {
  RegimeKind kind = RegimeKind::Trivial;
  Int torsionN = 1;           // N for TorsionMuN / ProperCyclic (1 otherwise)
  std::optional<LogPoint> q;  // canonical off-circle generator (ProperCyclic)
  bool angularDense = false;  // ProperCyclic: arguments of q^Z dense in S^1?
};

Regime classifyRegime(const GammaModel& G);

// Gamma has a point of accumulation in C^* iff it is not discrete-or-finite;
// equivalently the regime is none of Trivial / TorsionMuN / ProperCyclic for
// the closed-subgroup part, but any |q| != 1 already accumulates at 0.
bool hasAccumulation(const Regime& r);

// [C^*/Gamma] Hausdorff iff Gamma is closed in C^*.
bool isHausdorff(const Regime& r);

struct EllipticData {
  LogPoint q;  // lattice of the elliptic quotient is 2*pi*i*(Z + omega_q Z)
};

// Only defined when Gamma = q^Z is free of torsion with |q| != 1.
EllipticData ellipticData(const GammaModel& G, const Regime& r);

struct MeridianData {
  std::vector<Int> m;  // alpha_i = m_i * omega_q (mod Z), one per residue
  Int d = 0;           // gcd of the m_i; 0 when there are no residues
};

// Exponents of the meridian classes along q; requires the elliptic regime
// and residues that actually land in q^Z.
MeridianData meridianExponents(const GammaModel& G, const Regime& r);

}  // namespace cstar
