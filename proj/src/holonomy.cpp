#include "cstar/holonomy.hpp"

namespace cstar {

LogPoint normalizeLog(const QuadComplex& w) {
  Rational p = w.re.rationalPart();
  Int f = floorOf(p);
  if (f == 0) return LogPoint{w};
  QuadComplex out = w;
  out.re = QuadReal(p - Rational(f), w.re.quadPart(), w.re.fieldD());
  return LogPoint{out};
}

LogPoint logPow(const LogPoint& x, const Int& n) {
  Rational c(n);
  QuadComplex w{QuadReal(c * x.omega.re.rationalPart(), c * x.omega.re.quadPart(),
                         x.omega.re.fieldD()),
                QuadReal(c * x.omega.im.rationalPart(), c * x.omega.im.quadPart(),
                         x.omega.im.fieldD())};
  return normalizeLog(w);
}

RatVector coords4(const QuadComplex& w) {
  RatVector v(4);
  v(0) = w.re.rationalPart();
  v(1) = w.re.quadPart();
  v(2) = w.im.rationalPart();
  v(3) = w.im.quadPart();
  return v;
}

Lattice relationLattice(const FieldContext& field, const std::vector<LogPoint>& gens) {
  (void)field;  // exponents already carry their field tags
  const Index n = static_cast<Index>(gens.size());
  // v is a relation iff sum v_j w_j = t for some integer t, i.e. (v, t) kills
  // the single complex form (w_1, ..., w_n, -1); project the kernel back.
  QuadMatrix forms(2, n + 1);
  for (Index j = 0; j < n; ++j) {
    forms(0, j) = gens[static_cast<std::size_t>(j)].omega.re;
    forms(1, j) = gens[static_cast<std::size_t>(j)].omega.im;
  }
  forms(0, n) = QuadReal(-1);
  forms(1, n) = QuadReal(0);
  Lattice aug = integerKernel(forms, n + 1);
  // t is pinned by v, so dropping the last coordinate loses nothing
  IntMatrix proj = aug.basis.leftCols(n);
  return latticeFromRows(proj, n);
}

GammaModel makeGamma(const FieldContext& field, const std::vector<QuadComplex>& residues,
                     const std::vector<QuadComplex>& periods) {
  GammaModel G;
  G.field = field;
  G.residueCount = static_cast<Index>(residues.size());
  for (const auto& a : residues) G.gens.push_back(normalizeLog(a));
  for (const auto& p : periods) G.gens.push_back(normalizeLog(p));
  G.relations = relationLattice(field, G.gens);
  G.invariants = quotientInvariants(G.relations);
  return G;
}

bool gammaContains(const GammaModel& G, const QuadComplex& w) {
  RatMatrix rows(G.n() + 1, 4);
  rows.row(0) = coords4(QuadComplex(QuadReal(1))).transpose();
  for (Index j = 0; j < G.n(); ++j)
    rows.row(j + 1) = coords4(G.gens[static_cast<std::size_t>(j)].omega).transpose();
  return inRationalRowSpanZ(rows, coords4(w));
}

const char* regimeName(RegimeKind k) {
  switch (k) {
    case RegimeKind::Trivial: return "Trivial";
    case RegimeKind::TorsionMuN: return "TorsionMuN";
    case RegimeKind::ProperCyclic: return "ProperCyclic";
    case RegimeKind::UnitaryWild: return "UnitaryWild";
    case RegimeKind::RadialWild: return "RadialWild";
    case RegimeKind::MixedWild: return "MixedWild";
  }
  return "?";
}

namespace {

// order of the subgroup of Q/Z generated by the given rationals
Int torsionOrderOf(const std::vector<Rational>& vals) {
  Int N = 1;
  for (const Rational& r : vals) N = lcmInt(N, den(r));
  return N;
}

QuadComplex combineGens(const std::vector<LogPoint>& gens, const IntVector& v) {
  QuadComplex acc;
  for (Index j = 0; j < v.size(); ++j) {
    Rational c(v(j));
    const QuadComplex& w = gens[static_cast<std::size_t>(j)].omega;
    acc = acc + QuadComplex(QuadReal(c) * w.re, QuadReal(c) * w.im);
  }
  return acc;
}

}  // namespace

Regime classifyRegime(const GammaModel& G) {
  const Index n = G.n();
  Regime out;

  // radial rank: dimension of the Q-span of the Im(w_j) inside Q + Q sqrt(d)
  RatMatrix imCoords(n, 2);
  for (Index j = 0; j < n; ++j) {
    auto [p, q] = qCoords(G.gens[static_cast<std::size_t>(j)].omega.im);
    imCoords(j, 0) = p;
    imCoords(j, 1) = q;
  }
  Index rRad = rankField<Rational>(imCoords);

  if (rRad >= 2) {
    out.kind = RegimeKind::RadialWild;
    return out;
  }

  if (rRad == 0) {
    // everything sits on the unit circle
    bool irrational = false;
    std::vector<Rational> angles;
    for (const LogPoint& g : G.gens) {
      if (!g.omega.re.isRational()) irrational = true;
      angles.push_back(g.omega.re.rationalPart());
    }
    if (irrational) {
      out.kind = RegimeKind::UnitaryWild;
      return out;
    }
    Int N = torsionOrderOf(angles);
    out.torsionN = N;
    out.kind = (N == 1) ? RegimeKind::Trivial : RegimeKind::TorsionMuN;
    return out;
  }

  // radial rank 1: the circle part of Gamma is the image of the sublattice
  // of exponent vectors with vanishing Im
  QuadMatrix imForms(1, n);
  for (Index j = 0; j < n; ++j) imForms(0, j) = G.gens[static_cast<std::size_t>(j)].omega.im;
  Lattice onCircle = integerKernel(imForms, n);

  std::vector<Rational> angles;
  for (Index i = 0; i < onCircle.basis.rows(); ++i) {
    QuadComplex val = combineGens(G.gens, onCircle.basis.row(i).transpose());
    if (!val.im.isZero()) fail(Err::Internal, "circle sublattice left the circle");
    if (!val.re.isRational()) {
      out.kind = RegimeKind::MixedWild;
      return out;
    }
    angles.push_back(val.re.rationalPart());
  }
  Int N = torsionOrderOf(angles);

  // canonical off-circle generator: the Z-module of radial coordinates
  // { Im(sum v_j w_j) } has rank 1; its positive generator comes from the
  // HNF transform of the coordinate matrix
  Int D = 1;
  for (Index j = 0; j < n; ++j)
    for (Index c = 0; c < 2; ++c) D = lcmInt(D, den(imCoords(j, c)));
  IntMatrix scaled(n, 2);
  for (Index j = 0; j < n; ++j)
    for (Index c = 0; c < 2; ++c)
      scaled(j, c) = num(imCoords(j, c)) * (D / den(imCoords(j, c)));
  HnfResult h = hnf(scaled);
  if (h.rank != 1) fail(Err::Internal, "radial rank 1 expected a rank-1 module");
  IntVector vstar = h.U.row(0).transpose();
  QuadComplex w = combineGens(G.gens, vstar);
  if (qrealSign(w.im) < 0) w = -w;
  LogPoint q = normalizeLog(w);
  // among the N torsion translates q * mu_N, take the least angular offset
  Rational p = q.omega.re.rationalPart();
  Rational step(1, N);
  Rational reduced = p - Rational(floorOf(p / step)) * step;
  q.omega.re = QuadReal(reduced, q.omega.re.quadPart(), q.omega.re.fieldD());

  out.kind = RegimeKind::ProperCyclic;
  out.torsionN = N;
  out.q = q;
  out.angularDense = !q.omega.re.isRational();
  return out;
}

bool hasAccumulation(const Regime& r) {
  return r.kind != RegimeKind::Trivial && r.kind != RegimeKind::TorsionMuN;
}

bool isHausdorff(const Regime& r) {
  return r.kind == RegimeKind::Trivial || r.kind == RegimeKind::TorsionMuN ||
         r.kind == RegimeKind::ProperCyclic;
}

EllipticData ellipticData(const GammaModel& G, const Regime& r) {
  (void)G;
  if (r.kind != RegimeKind::ProperCyclic || r.torsionN != 1)
    fail(Err::NotElliptic, std::string("regime ") + regimeName(r.kind) +
                               (r.kind == RegimeKind::ProperCyclic ? " with torsion" : ""));
  return EllipticData{*r.q};
}

MeridianData meridianExponents(const GammaModel& G, const Regime& r) {
  EllipticData e = ellipticData(G, r);
  const QuadComplex& q = e.q.omega;
  MeridianData out;
  for (Index i = 0; i < G.residueCount; ++i) {
    const QuadComplex& a = G.gens[static_cast<std::size_t>(i)].omega;
    // alpha = m * omega_q (mod Z) forces m = Im(alpha) / Im(omega_q)
    Int m = 0;
    if (!a.im.isZero()) {
      QuadReal ratio = a.im / q.im;
      if (!ratio.isRational() || den(ratio.rationalPart()) != 1)
        fail(Err::NoSolution, "residue modulus is not a power of |q|");
      m = num(ratio.rationalPart());
    }
    QuadReal rem = a.re - QuadReal(Rational(m)) * q.re;
    if (!rem.isRational() || den(rem.rationalPart()) != 1)
      fail(Err::NoSolution, "residue argument is off the q-orbit");
    out.m.push_back(m);
  }
  Int d = 0;
  for (const Int& m : out.m) d = gcdInt(d, m);
  out.d = d;
  return out;
}

}  // namespace cstar
