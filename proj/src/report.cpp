#include "cstar/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "cstar/boundary.hpp"
#include "cstar/develop.hpp"
#include "cstar/endo.hpp"
#include "cstar/error.hpp"
#include "cstar/holonomy.hpp"

namespace cstar {
namespace {

constexpr double kTau = 6.283185307179586476925286766559;

std::string boolStr(bool b) { return b ? "true" : "false"; }

std::string fmtIntVec(const IntVector& v) {
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += str(v(i));
  }
  return out + "]";
}

std::string fmtIntMat(const IntMatrix& m) {
  if (m.rows() == 0) return "[]";
  std::string out = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += fmtIntVec(m.row(i).transpose());
  }
  return out + "]";
}

std::string fmtFactors(const std::vector<Int>& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += str(f[i]);
  }
  return out + "]";
}

std::string fmtQuadVec(const QuadVector& v) {
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += quadLit(v(i));
  }
  return out + "]";
}

std::string joinNames(const std::vector<std::string>& names) {
  if (names.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out;
}

// Deterministic uniforms independent of the standard library's distribution
// internals: 53 mantissa bits straight from the engine.
double nextUnit(std::uint64_t& state) {
  // splitmix64 step
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

Int eulerPhi(const Int& n) {
  Int count = 0;
  for (Int k = 1; k <= n; ++k)
    if (gcdInt(k, n) == 1) ++count;
  return count;
}

int cappedRadius(int requested, std::size_t ngens) {
  if (ngens == 0) return requested;
  int r = requested;
  while (r > 1 && std::pow(2.0 * r + 1.0, static_cast<double>(ngens)) > 2.0e6) --r;
  return r;
}

Cplx exactMultiplier(const QuadComplex& alpha) {
  double a = alpha.re.toDouble(), b = alpha.im.toDouble();
  return std::polar(std::exp(-kTau * b), kTau * a);
}

struct Context {
  const Scenario& sc;
  GammaModel model;
  Regime regime;
  std::map<std::string, QuadComplex> residueByName;
};

void sectionScenario(const Context& cx, std::uint64_t seed, Report& rep) {
  ReportSection s;
  s.title = "scenario";
  s.put("seed", std::to_string(seed));
  s.put("field_d", std::to_string(cx.sc.field.d));
  std::vector<std::string> cn, pn, sn;
  for (const auto& c : cx.sc.components) cn.push_back(c.name);
  for (const auto& p : cx.sc.periods) pn.push_back(p.name);
  for (const auto& st : cx.sc.strata) sn.push_back(st.name + "(" + joinNames(st.components) + ")");
  s.put("components", joinNames(cn));
  s.put("periods", joinNames(pn));
  s.put("strata", sn.empty() ? "-" : joinNames(sn));
  for (const auto& c : cx.sc.components) s.put("residue_" + c.name, cplxLit(c.residue));
  for (const auto& p : cx.sc.periods) s.put("period_" + p.name, cplxLit(p.exponent));
  rep.sections.push_back(std::move(s));
}

void sectionClassify(const Context& cx, Report& rep) {
  ReportSection s;
  s.title = "classify";
  {
    std::string gens;
    for (Index j = 0; j < cx.model.n(); ++j) {
      if (j) gens += ", ";
      gens += cplxLit(cx.model.gens[static_cast<std::size_t>(j)].omega);
    }
    s.put("generators", gens.empty() ? "-" : gens);
  }
  s.put("relation_rank", std::to_string(cx.model.relations.rank()));
  s.put("relation_basis", fmtIntMat(cx.model.relations.basis));
  s.put("free_rank", std::to_string(cx.model.invariants.freeRank));
  s.put("invariant_factors", fmtFactors(cx.model.invariants.torsion));
  s.put("regime", regimeName(cx.regime.kind));
  s.put("torsion_N", str(cx.regime.torsionN));
  s.put("hausdorff", boolStr(isHausdorff(cx.regime)));
  s.put("accumulation", boolStr(hasAccumulation(cx.regime)));
  if (cx.regime.kind == RegimeKind::ProperCyclic) {
    const LogPoint& q = *cx.regime.q;
    s.put("omega_q", cplxLit(q.omega));
    s.put("modulus_q", fmtDouble(std::exp(-kTau * q.omega.im.toDouble())));
    s.put("angular_dense", boolStr(cx.regime.angularDense));
    if (cx.regime.torsionN == 1) {
      s.put("elliptic_period", cplxLit(q.omega));
      if (cx.model.residueCount > 0) {
        MeridianData md = meridianExponents(cx.model, cx.regime);
        IntVector mv(static_cast<Index>(md.m.size()));
        for (std::size_t i = 0; i < md.m.size(); ++i) mv(static_cast<Index>(i)) = md.m[i];
        s.put("meridian_m", fmtIntVec(mv));
        s.put("meridian_gcd", str(md.d));
      }
    }
  }
  rep.sections.push_back(std::move(s));
}

void sectionEndos(const Context& cx, Report& rep) {
  ReportSection s;
  s.title = "endos";
  RealizableFamily fam = realizableEndomorphisms(cx.model, cx.regime);
  switch (fam.kind) {
    case FamilyKind::AllMaps:
      s.put("family", "all_maps");
      s.put("endo_count", "1");
      s.put("aut_count", "1");
      break;
    case FamilyKind::MuNPower:
      s.put("family", "mu_N_powers");
      s.put("N", str(fam.N));
      if (fam.N <= 1000000) {
        s.put("endo_count", str(fam.N));
        s.put("aut_count", str(eulerPhi(fam.N)));
      }
      break;
    case FamilyKind::EllipticOrder:
      s.put("family", "elliptic_order");
      break;
    case FamilyKind::PowerMaps:
      s.put("family", "power_maps");
      break;
  }
  if (fam.ring) {
    if (fam.appliesToFreeQuotient) s.put("ring_of", "free_quotient");
    if (fam.ring->nontrivial) {
      s.put("cm_ring", "order");
      s.put("cm_minpoly", "[" + str(fam.ring->A) + "," + str(fam.ring->B) + "," + str(fam.ring->C) + "]");
      s.put("cm_disc", str(fam.ring->disc));
    } else {
      s.put("cm_ring", "Z");
    }
  }
  rep.sections.push_back(std::move(s));
}

void sectionAut2(const Context& cx, Report& rep) {
  ReportSection s;
  s.title = "aut2";
  s.put("pi0", "(C^*/Gamma) x Z/2");
  s.put("pi1", "Gamma x Gamma");
  {
    std::string mod = "Z";
    for (const auto& g : cx.model.gens) mod += " + (" + cplxLit(g.omega) + ")*Z";
    s.put("translation_modulus", mod);
  }
  s.put("inversion_on_inertia", "(a_0, a_inf) -> (-a_inf, -a_0)");
  // structural smoke checks, reported so a reader can trust the algebra
  {
    AutElement inv{QuadComplex(), -1};
    AutElement sq = composeAutOpen(cx.model, inv, inv);
    AutElement id{QuadComplex(), 1};
    s.put("involution_check", autEqual(cx.model, sq, id) ? "pass" : "fail");
    bool assocOk = true;
    std::vector<AutElement> pool;
    pool.push_back(AutElement{QuadComplex(QuadReal(Rational(1, 2))), 1});
    pool.push_back(inv);
    for (const auto& g : cx.model.gens) pool.push_back(AutElement{g.omega, -1});
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const AutElement& x = pool[i];
      const AutElement& y = pool[(i + 1) % pool.size()];
      const AutElement& z = pool[(i + 2) % pool.size()];
      AutElement l = composeAutOpen(cx.model, composeAutOpen(cx.model, x, y), z);
      AutElement r = composeAutOpen(cx.model, x, composeAutOpen(cx.model, y, z));
      if (!autEqual(cx.model, l, r)) assocOk = false;
    }
    s.put("assoc_check", assocOk ? "pass" : "fail");
  }
  for (const auto& c : cx.sc.components) {
    auto img = inertiaAction(cx.model, -1, {c.residue, QuadComplex()});
    s.put("inertia_swap_" + c.name,
          "(" + cplxLit(normalizeLog(c.residue).omega) + ", 0) -> (" + cplxLit(img.first.omega) +
              ", " + cplxLit(img.second.omega) + ")");
  }
  rep.sections.push_back(std::move(s));
}

void sectionKummer(const Context& cx, Report& rep) {
  ReportSection s;
  s.title = "kummer";
  const Int& N = *cx.sc.kummerN;
  s.put("order", str(N));
  {
    GammaModel ref = kummerRefine(cx.model, N);
    Regime rr = classifyRegime(ref);
    s.put("refined_regime", regimeName(rr.kind));
    s.put("refined_free_rank", std::to_string(ref.invariants.freeRank));
    s.put("refined_invariant_factors", fmtFactors(ref.invariants.torsion));
    s.put("refined_torsion_N", str(rr.torsionN));
  }
  {
    GammaModel push = kummerPushforward(cx.model, N);
    Regime pr = classifyRegime(push);
    s.put("pushforward_regime", regimeName(pr.kind));
    for (std::size_t i = 0; i < cx.sc.components.size(); ++i) {
      QuadComplex scaled = cx.sc.components[i].residue;
      scaled = Rational(N) * scaled;
      s.put("pushforward_residue_" + cx.sc.components[i].name, cplxLit(normalizeLog(scaled).omega));
    }
  }
  for (const auto& c : cx.sc.components) {
    auto ko = kummerOrder(c.residue);
    s.put("kummer_order_" + c.name, ko ? str(*ko) : "none");
  }
  rep.sections.push_back(std::move(s));
}

Stratum buildStratum(const Context& cx, const StratumDecl& decl) {
  Stratum st;
  st.field = cx.sc.field;
  st.names = decl.components;
  for (const auto& n : decl.components) st.residues.push_back(cx.residueByName.at(n));
  return st;
}

void sectionBoundary(const Context& cx, const StratumDecl& decl, Report& rep) {
  Stratum st = buildStratum(cx, decl);
  ReportSection s;
  s.title = "boundary:" + decl.name;
  s.put("components", joinNames(decl.components));
  s.put("depth", std::to_string(st.ell()));
  for (Index i = 0; i < st.ell(); ++i) {
    std::vector<Int> m(static_cast<std::size_t>(st.ell()), Int(0));
    m[static_cast<std::size_t>(i)] = 1;
    s.put("char_" + st.names[static_cast<std::size_t>(i)], cplxLit(boundaryCharacterEval(st, m).omega));
  }
  TorusReport tr = torusReport(st);
  s.put("r", std::to_string(tr.r));
  s.put("kernel_basis", fmtIntMat(tr.kernel.basis));
  s.put("s", std::to_string(tr.s));
  s.put("leaf", "R^" + std::to_string(tr.freeDim) + " x T^" + std::to_string(tr.s));
  s.put("torus_dim", std::to_string(tr.torusDim));
  s.put("t", std::to_string(tr.t));
  s.put("closure_dim", std::to_string(tr.closureDim));
  s.put("leaf_closed", boolStr(tr.leafClosed));
  s.put("dense_in_closure", boolStr(tr.denseInClosure));
  LeafForms raw = realLeafForms(st);
  s.put("phi1_logr", fmtQuadVec(raw.phi1LogR));
  s.put("phi1_theta", fmtQuadVec(raw.phi1Theta));
  s.put("phi2_logr", fmtQuadVec(raw.phi2LogR));
  s.put("phi2_theta", fmtQuadVec(raw.phi2Theta));
  if (tr.twoTorus) {
    const T2Case& t2 = *tr.twoTorus;
    s.put("t2_case", std::string(1, t2.tag));
    if (t2.tag == 'B' || t2.tag == 'C') {
      s.put("t2_slope", t2.slopeFinite ? quadLit(t2.slope) : "inf");
      s.put("t2_slope_rational", boolStr(t2.slopeRational));
    }
  }
  for (const RadialEntry& e : radialDecomposition(st)) {
    std::string sign = e.reSign > 0 ? "+" : (e.reSign < 0 ? "-" : "0");
    s.put("radial_" + e.name, sign + ":" + landingName(e.landing));
  }
  for (Index i = 0; i < st.ell(); ++i) {
    Mechanism mech = boundaryMechanism(st.residues[static_cast<std::size_t>(i)]);
    std::string val = mechName(mech.kind);
    if (mech.kind == MechKind::KummerCase) val += "(" + str(mech.kummerN) + ")";
    s.put("mech_" + st.names[static_cast<std::size_t>(i)], val);
    s.put("obstruction_" + st.names[static_cast<std::size_t>(i)], boolStr(mech.extensionObstruction));
  }
  rep.sections.push_back(std::move(s));
}

void probeStratumOrbit(const Context& cx, const StratumDecl& decl, std::uint64_t seed,
                       ReportSection& s, Report& rep) {
  Stratum st = buildStratum(cx, decl);
  TorusReport tr = torusReport(st);
  const std::string tag = "orbit_" + decl.name;
  QuadVector v;
  std::string source;
  if (tr.s >= 1) {
    v.resize(st.ell());
    for (Index j = 0; j < st.ell(); ++j) v(j) = QuadReal(Rational(tr.kernel.basis(0, j)));
    source = "kernel";
  } else {
    // leaf direction: field nullspace of the canonical covector pair
    QuadMatrix ab(2, st.ell());
    for (Index j = 0; j < st.ell(); ++j) {
      QuadComplex a = normalizeLog(st.residues[static_cast<std::size_t>(j)]).omega;
      ab(0, j) = a.re;
      ab(1, j) = a.im;
    }
    QuadMatrix ns = nullspaceField<QuadReal>(ab);
    if (ns.rows() == 0) {
      s.put(tag, "none (orbit direction fully constrained)");
      return;
    }
    v = ns.row(0).transpose();
    source = "leaf";
  }
  s.put(tag + "_source", source);
  s.put(tag + "_direction", fmtQuadVec(v));
  Eigen::VectorXd w(v.size());
  for (Index j = 0; j < v.size(); ++j) w(j) = v(j).toDouble();
  OrbitSample sample = sampleTorusOrbit(w, cx.sc.probe.points, cx.sc.probe.subdiv);
  sample.seed = seed;
  s.put(tag + "_min_return", fmtDouble(orbitMinReturn(sample)));
  IntMatrix full = IntMatrix::Identity(st.ell(), st.ell());
  s.put(tag + "_coverage_full", fmtDouble(orbitCoverage(sample, full, cx.sc.probe.bins)));
  IntMatrix closure = orbitClosureBasis(v);
  s.put(tag + "_closure_rank", std::to_string(closure.rows()));
  s.put(tag + "_coverage_closure", fmtDouble(orbitCoverage(sample, closure, cx.sc.probe.bins)));
  s.put(tag + "_closed_exact", boolStr(closure.rows() == 1));
  s.put(tag + "_closed_observed", boolStr(orbitMinReturn(sample) < 1e-9));

  OrbitCsv csv;
  csv.stratum = decl.name;
  csv.ell = static_cast<std::size_t>(st.ell());
  csv.rows.reserve(static_cast<std::size_t>(sample.raw.rows()));
  for (Index k = 0; k < sample.raw.rows(); ++k) {
    std::vector<double> row(csv.ell);
    for (Index j = 0; j < sample.raw.cols(); ++j) {
      double x = sample.raw(k, j);
      row[static_cast<std::size_t>(j)] = x - std::floor(x);
    }
    csv.rows.push_back(std::move(row));
  }
  rep.orbits.push_back(std::move(csv));
}

void sectionProbe(const Context& cx, std::uint64_t seed, Report& rep) {
  ReportSection s;
  s.title = "probe";
  const ProbeSettings& ps = cx.sc.probe;
  s.put("points", std::to_string(ps.points));
  s.put("bins", std::to_string(ps.bins));
  s.put("radius", std::to_string(ps.radius));
  s.put("steps", std::to_string(ps.steps));
  s.put("subdiv", std::to_string(ps.subdiv));

  std::vector<QuadComplex> residues;
  for (const auto& c : cx.sc.components) residues.push_back(c.residue);
  if (!residues.empty()) {
    NumericChart chart = chartFrom(residues);
    for (std::size_t i = 0; i < cx.sc.components.size(); ++i) {
      Cplx got = meridianMultiplierProbe(chart, static_cast<Index>(i), ps.steps);
      Cplx want = exactMultiplier(cx.sc.components[i].residue);
      s.put("multiplier_" + cx.sc.components[i].name, fmtComplex(got.real(), got.imag()));
      s.put("multiplier_err_" + cx.sc.components[i].name, fmtDouble(std::abs(got - want)));
      double slope = radialSlopeProbe(chart, static_cast<Index>(i), 200);
      s.put("slope_" + cx.sc.components[i].name, fmtDouble(slope));
      s.put("slope_err_" + cx.sc.components[i].name,
            fmtDouble(std::abs(slope - cx.sc.components[i].residue.re.toDouble())));
    }
    std::uint64_t rng = seed;
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> r(residues.size()), th(residues.size());
      for (std::size_t i = 0; i < residues.size(); ++i) {
        r[i] = 0.6 + 0.8 * nextUnit(rng);
        th[i] = kTau * nextUnit(rng);
      }
      worst = std::max(worst, logderivResidual(chart, r, th, 1e-5));
    }
    s.put("logderiv_max_residual", fmtDouble(worst));
  }

  {
    std::vector<Cplx> gens;
    for (const auto& g : cx.model.gens) gens.push_back(exactMultiplier(g.omega));
    if (gens.empty()) {
      s.put("gamma_words", "0");
      s.put("gamma_accumulation", "false");
      s.put("gamma_matches_exact", boolStr(!hasAccumulation(cx.regime)));
    } else {
      int radius = cappedRadius(ps.radius, gens.size());
      GammaOrbitStats stats = gammaOrbitProbe(gens, radius);
      s.put("gamma_radius_effective", std::to_string(radius));
      s.put("gamma_words", std::to_string(stats.wordsVisited));
      s.put("gamma_min_dist_to_one", fmtDouble(stats.minDistToOne));
      s.put("gamma_min_log_abs", stats.offCircleWord ? fmtDouble(stats.minLogAbs) : "none");
      s.put("gamma_off_circle", boolStr(stats.offCircleWord));
      s.put("gamma_accumulation", boolStr(stats.accumulationFlag));
      s.put("gamma_matches_exact", boolStr(stats.accumulationFlag == hasAccumulation(cx.regime)));
    }
  }

  for (const auto& decl : cx.sc.strata) probeStratumOrbit(cx, decl, seed, s, rep);
  rep.sections.push_back(std::move(s));
}

}  // namespace

std::string fmtDouble(double x) {
  if (x == 0.0) x = 0.0;  // flush -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string fmtComplex(double re, double im) {
  if (im == 0.0) im = 0.0;
  std::string out = fmtDouble(re);
  if (im >= 0.0 || std::isnan(im))
    out += "+" + fmtDouble(im) + "i";
  else
    out += "-" + fmtDouble(-im) + "i";
  return out;
}

Report runScenario(const Scenario& sc, std::uint64_t seed) {
  Context cx{sc, {}, {}, {}};
  std::vector<QuadComplex> residues, periods;
  for (const auto& c : sc.components) {
    residues.push_back(c.residue);
    cx.residueByName.emplace(c.name, c.residue);
  }
  for (const auto& p : sc.periods) periods.push_back(p.exponent);
  cx.model = makeGamma(sc.field, residues, periods);
  cx.regime = classifyRegime(cx.model);

  Report rep;
  sectionScenario(cx, seed, rep);
  if (sc.doClassify) sectionClassify(cx, rep);
  if (sc.doEndos) sectionEndos(cx, rep);
  if (sc.doAut2) sectionAut2(cx, rep);
  if (sc.kummerN) sectionKummer(cx, rep);
  if (sc.doBoundary)
    for (const auto& st : sc.strata) sectionBoundary(cx, st, rep);
  if (sc.doProbe) sectionProbe(cx, seed, rep);
  return rep;
}

std::string renderReport(const Report& r) {
  std::string out;
  for (std::size_t i = 0; i < r.sections.size(); ++i) {
    if (i) out += "\n";
    out += "[" + r.sections[i].title + "]\n";
    for (const auto& [k, v] : r.sections[i].entries) out += k + " = " + v + "\n";
  }
  return out;
}

std::string renderOrbitCsv(const OrbitCsv& csv) {
  std::string out = "k";
  for (std::size_t j = 1; j <= csv.ell; ++j) out += ",theta_" + std::to_string(j);
  out += "\n";
  char buf[64];
  for (std::size_t k = 0; k < csv.rows.size(); ++k) {
    out += std::to_string(k);
    for (double x : csv.rows[k]) {
      std::snprintf(buf, sizeof(buf), ",%.12f", x);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace cstar
