#pragma once

// What happens over a boundary stratum where l divisor branches meet: the
// monodromy character of the fibre torus (S^1)^l, the induced linear real
// foliation with its leaf/closure dimensions, which side of the stratum
// transversals land on, and the local mechanism (finite Kummer cover vs
// genuinely wild behavior) attached to a single branch.
//
// Character, torus dynamics and mechanism depend on residues only modulo Z
// and are computed from canonical exponents; the Phi-forms and the radial
// landing table see the raw residues (an integer shift tilts the real forms
// but not the group).

#include <optional>
#include <string>
#include <vector>

#include "cstar/holonomy.hpp"

namespace cstar {

struct Stratum {
  FieldContext field;
  std::vector<std::string> names;      // component names, size l >= 1
  std::vector<QuadComplex> residues;   // residue alpha_i per component

  Index ell() const { return static_cast<Index>(residues.size()); }
};

// Character value chi(m) as an exponent: normalize(sum alpha_i m_i).
LogPoint boundaryCharacterEval(const Stratum& s, const std::vector<Int>& m);

// Coefficients of the two commuting real first integrals in coordinates
// (log r_1..log r_l, theta_1..theta_l):
//   Phi_1 = sum a_i log r_i - sum b_i theta_i
//   Phi_2 = sum b_i log r_i + sum a_i theta_i,     alpha_i = a_i + i b_i.
struct LeafForms {
  QuadVector phi1LogR, phi1Theta, phi2LogR, phi2Theta;
};

LeafForms realLeafForms(const Stratum& s);  // raw residues

// Two-dimensional strata admit the classical trichotomy by
// Delta = a_1 b_2 - a_2 b_1.
struct T2Case {
  char tag = 'Z';  // 'A': Delta != 0; 'B': Delta = 0, a != 0; 'C': a = 0, b != 0;
                   // 'Z': both forms vanish identically
  bool slopeFinite = false;
  QuadReal slope;       // -c_1/c_2 for the governing covector c (tags B, C)
  bool slopeRational = false;
};

struct TorusReport {
  Index ell = 0;
  Index r = 0;          // rank of the covector pair (a; b) over the field
  Lattice kernel;       // { v in Z^l : a.v = 0, b.v = 0 }, saturated
  Index s = 0;          // kernel rank: compact directions inside a leaf
  Index freeDim = 0;    // leaf = R^freeDim x T^s
  Index torusDim = 0;
  Index t = 0;          // independent rational covectors in span{a, b}
  Index closureDim = 0; // = l - t
  bool leafClosed = false;
  bool denseInClosure = false;
  LeafForms forms;      // canonical-residue coefficients
  std::optional<T2Case> twoTorus;
};

TorusReport torusReport(const Stratum& s);

enum class Landing { AtZero, AtInfinity, None };

const char* landingName(Landing l);

// D^+/D^-/D^0 split of the stratum components by the exact sign of Re(alpha_i)
// (raw residues: this is the slope of log|z| against log r_i).
struct RadialEntry {
  std::string name;
  int reSign = 0;
  Landing landing = Landing::None;
};

std::vector<RadialEntry> radialDecomposition(const Stratum& s);

// Least N >= 1 with N*alpha integral, for real rational alpha; nullopt
// otherwise (no finite cover trivializes the local monodromy).
std::optional<Int> kummerOrder(const QuadComplex& alpha);

enum class MechKind { KummerCase, AngularCase, RadialCase, MixedCase };

const char* mechName(MechKind k);

// Local boundary mechanism of one branch, read off the multiplier
// g = exp(2 pi i alpha): finite order (Kummer, with its order), dense
// rotation (Angular), pure modulus drift (Radial) or both (Mixed); the
// extension obstruction records g != 1.
struct Mechanism {
  MechKind kind = MechKind::KummerCase;
  Int kummerN = 1;  // meaningful for KummerCase
  bool extensionObstruction = false;
};

Mechanism boundaryMechanism(const QuadComplex& alpha);

}  // namespace cstar
