#include "cstar/boundary.hpp"

namespace cstar {

namespace {

void checkStratum(const Stratum& s) {
  if (s.residues.empty()) fail(Err::EmptyStratum, "stratum without components");
  if (!s.names.empty() && s.names.size() != s.residues.size())
    fail(Err::DimensionMismatch, "component names vs residues");
}

LeafForms formsFrom(const std::vector<QuadComplex>& alphas) {
  const Index l = static_cast<Index>(alphas.size());
  LeafForms f{QuadVector(l), QuadVector(l), QuadVector(l), QuadVector(l)};
  for (Index i = 0; i < l; ++i) {
    const QuadComplex& a = alphas[static_cast<std::size_t>(i)];
    f.phi1LogR(i) = a.re;
    f.phi1Theta(i) = -a.im;
    f.phi2LogR(i) = a.im;
    f.phi2Theta(i) = a.re;
  }
  return f;
}

bool dependentOverQ(const QuadReal& x, const QuadReal& y) {
  RatMatrix m(2, 2);
  m(0, 0) = x.rationalPart();
  m(0, 1) = x.quadPart();
  m(1, 0) = y.rationalPart();
  m(1, 1) = y.quadPart();
  return rankField<Rational>(m) <= 1;
}

}  // namespace

LogPoint boundaryCharacterEval(const Stratum& s, const std::vector<Int>& m) {
  checkStratum(s);
  if (m.size() != s.residues.size())
    fail(Err::DimensionMismatch, "character argument length vs stratum depth");
  QuadComplex acc;
  for (std::size_t i = 0; i < m.size(); ++i) acc = acc + Rational(m[i]) * s.residues[i];
  return normalizeLog(acc);
}

LeafForms realLeafForms(const Stratum& s) {
  checkStratum(s);
  return formsFrom(s.residues);
}

TorusReport torusReport(const Stratum& s) {
  checkStratum(s);
  const Index l = s.ell();
  // dynamics only sees the multiplier, so gauge-fix the residues mod Z
  std::vector<QuadComplex> alphas;
  alphas.reserve(s.residues.size());
  for (const QuadComplex& a : s.residues) alphas.push_back(normalizeLog(a).omega);

  TorusReport rep;
  rep.ell = l;
  rep.forms = formsFrom(alphas);

  QuadMatrix ab(2, l);
  for (Index i = 0; i < l; ++i) {
    ab(0, i) = alphas[static_cast<std::size_t>(i)].re;
    ab(1, i) = alphas[static_cast<std::size_t>(i)].im;
  }
  rep.r = rankField<QuadReal>(ab);
  rep.kernel = integerKernel(ab, l);
  rep.s = rep.kernel.rank();
  rep.freeDim = l - rep.r - rep.s;
  rep.torusDim = rep.s;

  // rational covectors lambda a + mu b: the sqrt(d)-component must vanish
  // coordinate-wise; unknowns are the four rational coordinates of
  // (lambda, mu) in Q(sqrt(d))^2
  RatMatrix eq(l, 4);
  for (Index i = 0; i < l; ++i) {
    auto [ap, aq] = qCoords(ab(0, i));
    auto [bp, bq] = qCoords(ab(1, i));
    eq(i, 0) = aq;  // lambda_p * a_q
    eq(i, 1) = ap;  // lambda_q * a_p
    eq(i, 2) = bq;  // mu_p * b_q
    eq(i, 3) = bp;  // mu_q * b_p
  }
  RatMatrix sol = nullspaceField<Rational>(eq);
  RatMatrix rationalForms(sol.rows(), l);
  std::uint64_t dd = s.field.d;
  for (Index i = 0; i < l; ++i) {
    if (ab(0, i).fieldD() >= 2) dd = ab(0, i).fieldD();
    if (ab(1, i).fieldD() >= 2) dd = ab(1, i).fieldD();
  }
  Rational d(static_cast<long long>(dd));
  for (Index k = 0; k < sol.rows(); ++k)
    for (Index i = 0; i < l; ++i) {
      auto [ap, aq] = qCoords(ab(0, i));
      auto [bp, bq] = qCoords(ab(1, i));
      rationalForms(k, i) =
          sol(k, 0) * ap + sol(k, 1) * aq * d + sol(k, 2) * bp + sol(k, 3) * bq * d;
    }
  rep.t = rankField<Rational>(rationalForms);
  rep.closureDim = l - rep.t;
  rep.leafClosed = (l - rep.r == rep.closureDim);
  rep.denseInClosure = (l - rep.r < rep.closureDim);

  if (l == 2) {
    T2Case c;
    const QuadReal a1 = ab(0, 0), a2 = ab(0, 1), b1 = ab(1, 0), b2 = ab(1, 1);
    QuadReal delta = a1 * b2 - a2 * b1;
    bool aZero = a1.isZero() && a2.isZero();
    bool bZero = b1.isZero() && b2.isZero();
    if (!delta.isZero()) {
      c.tag = 'A';
    } else if (!aZero || !bZero) {
      c.tag = aZero ? 'C' : 'B';
      QuadReal c1 = aZero ? b1 : a1;
      QuadReal c2 = aZero ? b2 : a2;
      if (!c2.isZero()) {
        c.slopeFinite = true;
        c.slope = -c1 / c2;
      }
      c.slopeRational = dependentOverQ(c1, c2);
    }
    rep.twoTorus = c;
  }
  return rep;
}

const char* landingName(Landing l) {
  switch (l) {
    case Landing::AtZero: return "0";
    case Landing::AtInfinity: return "inf";
    case Landing::None: return "none";
  }
  return "?";
}

std::vector<RadialEntry> radialDecomposition(const Stratum& s) {
  checkStratum(s);
  std::vector<RadialEntry> out;
  for (std::size_t i = 0; i < s.residues.size(); ++i) {
    RadialEntry e;
    e.name = i < s.names.size() ? s.names[i] : "D" + std::to_string(i + 1);
    e.reSign = qrealSign(s.residues[i].re);
    e.landing = e.reSign > 0   ? Landing::AtZero
                : e.reSign < 0 ? Landing::AtInfinity
                               : Landing::None;
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<Int> kummerOrder(const QuadComplex& alpha) {
  if (!alpha.im.isZero() || !alpha.re.isRational()) return std::nullopt;
  return den(alpha.re.rationalPart());
}

const char* mechName(MechKind k) {
  switch (k) {
    case MechKind::KummerCase: return "Kummer";
    case MechKind::AngularCase: return "Angular";
    case MechKind::RadialCase: return "Radial";
    case MechKind::MixedCase: return "Mixed";
  }
  return "?";
}

Mechanism boundaryMechanism(const QuadComplex& alpha) {
  QuadComplex a = normalizeLog(alpha).omega;  // the multiplier only sees alpha mod Z
  Mechanism m;
  m.extensionObstruction = !a.isZero();
  if (a.im.isZero()) {
    if (a.re.isRational()) {
      m.kind = MechKind::KummerCase;
      m.kummerN = den(a.re.rationalPart());
    } else {
      m.kind = MechKind::AngularCase;
    }
  } else {
    m.kind = a.re.isZero() ? MechKind::RadialCase : MechKind::MixedCase;
  }
  return m;
}

}  // namespace cstar
