#include "cstar/endo.hpp"

namespace cstar {

EndoClass inducedEndomorphism(const GammaModel& G, const IntMatrix& A) {
  if (A.rows() != G.n() || A.cols() != G.n())
    fail(Err::DimensionMismatch, "endomorphism matrix size");
  if (!preservesLattice(A, G.relations))
    fail(Err::NotAnEndomorphism, "matrix does not preserve the relation lattice");
  return EndoClass{A};
}

bool endoEquivalent(const GammaModel& G, const IntMatrix& A, const IntMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols() || A.rows() != G.n())
    fail(Err::DimensionMismatch, "endomorphism matrix size");
  for (Index j = 0; j < G.n(); ++j) {
    IntVector diff = A.col(j) - B.col(j);
    if (!latticeContains(G.relations, diff)) return false;
  }
  return true;
}

bool isAutomorphismClass(const GammaModel& G, const IntMatrix& A) {
  inducedEndomorphism(G, A);  // validates shape and lattice preservation
  Lattice image = latticeFromRows(A.transpose(), G.n());  // columns of A as rows
  return isFullLattice(latticeSum(image, G.relations));
}

EndoClass composeEndo(const GammaModel& G, const EndoClass& f, const EndoClass& g) {
  return inducedEndomorphism(G, IntMatrix(f.A * g.A));
}

LogPoint endoGeneratorImage(const GammaModel& G, const IntMatrix& A, Index j) {
  QuadComplex acc;
  for (Index k = 0; k < G.n(); ++k) {
    Rational c(A(k, j));
    const QuadComplex& w = G.gens[static_cast<std::size_t>(k)].omega;
    acc = acc + QuadComplex(QuadReal(c) * w.re, QuadReal(c) * w.im);
  }
  return normalizeLog(acc);
}

bool semiequivCheck(const GammaModel& G, const Int& n, const IntMatrix& A) {
  inducedEndomorphism(G, A);
  IntMatrix P = IntMatrix::Identity(G.n(), G.n());
  for (Index i = 0; i < G.n(); ++i) P(i, i) = n;
  return endoEquivalent(G, A, P);
}

CmRing cmRing(const QuadComplex& w) {
  if (w.im.isZero()) fail(Err::DomainError, "multiplier ring needs a non-real exponent");
  QuadComplex w2 = w * w;
  // columns: coords of w^2, w, 1 in the Q-basis {1, sqrt(d), i, i sqrt(d)}
  RatMatrix M(4, 3);
  M.col(0) = coords4(w2);
  M.col(1) = coords4(w);
  M.col(2) = coords4(QuadComplex(QuadReal(1)));
  RatMatrix ker = nullspaceField<Rational>(M);
  CmRing out;
  if (ker.rows() == 0) return out;  // 1, w, w^2 independent over Q: End = Z
  if (ker.rows() > 1) fail(Err::Internal, "non-real exponent with 2-dim quadratic relation");
  // primitive integer relation, leading coefficient positive
  Int D = 1;
  for (Index j = 0; j < 3; ++j) D = lcmInt(D, den(ker(0, j)));
  Int a = num(ker(0, 0)) * (D / den(ker(0, 0)));
  Int b = num(ker(0, 1)) * (D / den(ker(0, 1)));
  Int c = num(ker(0, 2)) * (D / den(ker(0, 2)));
  Int g = gcdInt(gcdInt(absInt(a), absInt(b)), absInt(c));
  if (g == 0) fail(Err::Internal, "zero relation vector");
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  if (a == 0) fail(Err::Internal, "degenerate relation: exponent is rational");
  out.nontrivial = true;
  out.A = a;
  out.B = b;
  out.C = c;
  out.disc = b * b - 4 * a * c;
  if (out.disc >= 0) fail(Err::Internal, "real discriminant for non-real exponent");
  return out;
}

RealizableFamily realizableEndomorphisms(const GammaModel& G, const Regime& r) {
  (void)G;  // the split is fully determined by the regime data
  RealizableFamily fam;
  switch (r.kind) {
    case RegimeKind::Trivial:
      fam.kind = FamilyKind::AllMaps;
      break;
    case RegimeKind::TorsionMuN:
      fam.kind = FamilyKind::MuNPower;
      fam.N = r.torsionN;
      break;
    case RegimeKind::ProperCyclic:
      if (r.torsionN == 1) {
        fam.kind = FamilyKind::EllipticOrder;
        fam.ring = cmRing(r.q->omega);
      } else {
        // mixed mu_N x q^Z: on the atlas only power maps are certified;
        // the elliptic theory governs the free quotient
        fam.kind = FamilyKind::PowerMaps;
        fam.ring = cmRing(r.q->omega);
        fam.appliesToFreeQuotient = true;
      }
      break;
    case RegimeKind::UnitaryWild:
    case RegimeKind::RadialWild:
    case RegimeKind::MixedWild:
      fam.kind = FamilyKind::PowerMaps;
      break;
  }
  return fam;
}

AutElement composeAutOpen(const GammaModel& G, const AutElement& x, const AutElement& y) {
  (void)G;
  if ((x.eps != 1 && x.eps != -1) || (y.eps != 1 && y.eps != -1))
    fail(Err::DomainError, "inversion flag must be +1 or -1");
  QuadComplex a = (x.eps == 1) ? x.a + y.a : x.a - y.a;
  return AutElement{normalizeLog(a).omega, x.eps * y.eps};
}

bool autEqual(const GammaModel& G, const AutElement& x, const AutElement& y) {
  if (x.eps != y.eps) return false;
  return gammaContains(G, x.a - y.a);
}

AutElement autInverse(const GammaModel& G, const AutElement& x) {
  // (a, e)^-1 = (-e a, e)
  QuadComplex a = (x.eps == 1) ? -x.a : x.a;
  (void)G;
  return AutElement{normalizeLog(a).omega, x.eps};
}

std::pair<LogPoint, LogPoint> inertiaAction(const GammaModel& G, int eps,
                                            const std::pair<QuadComplex, QuadComplex>& inertia) {
  if (eps != 1 && eps != -1) fail(Err::DomainError, "inversion flag must be +1 or -1");
  if (!gammaContains(G, inertia.first) || !gammaContains(G, inertia.second))
    fail(Err::NotInGamma, "inertia pair outside Gamma x Gamma");
  if (eps == 1) return {normalizeLog(inertia.first), normalizeLog(inertia.second)};
  // inversion swaps 0 and infinity and inverts the local monodromies
  return {normalizeLog(-inertia.second), normalizeLog(-inertia.first)};
}

GammaModel kummerRefine(const GammaModel& G, const Int& N) {
  if (N < 1) fail(Err::InvalidOrder, "refinement order must be >= 1");
  std::vector<QuadComplex> gens;
  gens.push_back(QuadComplex(QuadReal(Rational(1, N))));
  for (const LogPoint& g : G.gens) gens.push_back(g.omega);
  // roles are not carried over: the refined model is a plain group model
  return makeGamma(G.field, {}, gens);
}

GammaModel kummerPushforward(const GammaModel& G, const Int& N) {
  if (N < 1) fail(Err::InvalidOrder, "pushforward order must be >= 1");
  std::vector<QuadComplex> residues, periods;
  for (Index j = 0; j < G.n(); ++j) {
    QuadComplex w = Rational(N) * G.gens[static_cast<std::size_t>(j)].omega;
    (j < G.residueCount ? residues : periods).push_back(w);
  }
  return makeGamma(G.field, residues, periods);
}

std::vector<QuadComplex> scaleResidues(const std::vector<QuadComplex>& residues, const Int& N) {
  std::vector<QuadComplex> out;
  out.reserve(residues.size());
  for (const QuadComplex& a : residues) out.push_back(Rational(N) * a);
  return out;
}

}  // namespace cstar
