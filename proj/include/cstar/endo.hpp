#pragma once

// Endomorphisms of Gamma through integer matrices: A acts on exponent columns,
// descends to Gamma iff it preserves the relation lattice, and two matrices
// induce the same map iff they differ by columns inside the lattice.  On top
// of that: which endomorphisms are realizable by maps of the quotient stack,
// multiplier rings of elliptic quotients, and the automorphism 2-group of the
// open substack.

#include <optional>
#include <utility>
#include <vector>

#include "cstar/holonomy.hpp"

namespace cstar {

struct EndoClass {
  IntMatrix A;
};

// Wraps A as an endomorphism of Gamma; NotAnEndomorphism unless A maps the
// relation lattice into itself.
EndoClass inducedEndomorphism(const GammaModel& G, const IntMatrix& A);

// Same induced map on Gamma = Z^n / L?
bool endoEquivalent(const GammaModel& G, const IntMatrix& A, const IntMatrix& B);

// The induced endomorphism of the finitely generated group Z^n / L is
// invertible iff it is surjective (the group is Hopfian), i.e. iff the
// columns of A together with L span all of Z^n.
bool isAutomorphismClass(const GammaModel& G, const IntMatrix& A);

EndoClass composeEndo(const GammaModel& G, const EndoClass& f, const EndoClass& g);

// Image exponent of the j-th generator under A (column j pairing).
LogPoint endoGeneratorImage(const GammaModel& G, const IntMatrix& A, Index j);

// Does A induce the n-th power map on Gamma?
bool semiequivCheck(const GammaModel& G, const Int& n, const IntMatrix& A);

// --- multiplier ring of an elliptic quotient ---------------------------------

struct CmRing {
  bool nontrivial = false;  // false: End = Z
  Int A = 0, B = 0, C = 0;  // primitive A w^2 + B w + C = 0 when nontrivial
  Int disc = 0;             // B^2 - 4AC < 0; the ring is Z[A*w]
  bool operator==(const CmRing&) const = default;
};

// End of C / 2*pi*i*(Z + w Z) for a non-real quadratic w: either Z or an
// imaginary quadratic order detected from the minimal polynomial of w.
CmRing cmRing(const QuadComplex& w);

// --- realizable endomorphism families ----------------------------------------

enum class FamilyKind {
  AllMaps,        // Gamma trivial: nothing to preserve
  MuNPower,       // sigma(zeta) = zeta^m, every m mod N
  EllipticOrder,  // multiplications by the multiplier ring
  PowerMaps,      // accumulation forces sigma(g) = g^n
};

struct RealizableFamily {
  FamilyKind kind = FamilyKind::PowerMaps;
  Int N = 1;                   // MuNPower
  std::optional<CmRing> ring;  // EllipticOrder, and the free quotient's ring
                               // for ProperCyclic with torsion
  bool appliesToFreeQuotient = false;
};

RealizableFamily realizableEndomorphisms(const GammaModel& G, const Regime& r);

// --- automorphism 2-group of the open substack --------------------------------
//
// Aut splits as translation by a point of C^*/Gamma and the inversion; the
// composition law in exponent coordinates is (a, e) * (a', e') =
// (a + e a', e e'), with translations identified modulo Z + sum Z w_j.

struct AutElement {
  QuadComplex a;  // exponent of the translation part
  int eps = 1;    // +1 or -1
};

AutElement composeAutOpen(const GammaModel& G, const AutElement& x, const AutElement& y);
bool autEqual(const GammaModel& G, const AutElement& x, const AutElement& y);
AutElement autInverse(const GammaModel& G, const AutElement& x);

// Action of the inversion on an inertia pair (alpha_0, alpha_inf) in
// Gamma x Gamma: swap and invert; NotInGamma if a slot is outside Gamma.
std::pair<LogPoint, LogPoint> inertiaAction(const GammaModel& G, int eps,
                                            const std::pair<QuadComplex, QuadComplex>& inertia);

// --- Kummer refinement ---------------------------------------------------------

// Model of mu_N x Gamma: same generators with a fresh 1/N prefix.
GammaModel kummerRefine(const GammaModel& G, const Int& N);

// Pushforward along z -> z^N: every exponent (and residue) scales by N.
GammaModel kummerPushforward(const GammaModel& G, const Int& N);

std::vector<QuadComplex> scaleResidues(const std::vector<QuadComplex>& residues, const Int& N);

}  // namespace cstar
