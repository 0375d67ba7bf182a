#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cstar/endo.hpp"
#include "cstar/literal.hpp"

using namespace cstar;

namespace {

QuadComplex cx(const std::string& lit, std::uint64_t d = 0) {
  return parseCplxLit(lit, FieldContext::make(d));
}

GammaModel gamma(const std::vector<std::string>& residues, std::uint64_t d = 0) {
  std::vector<QuadComplex> rs;
  for (const auto& t : residues) rs.push_back(cx(t, d));
  return makeGamma(FieldContext::make(d), rs, {});
}

IntMatrix m1(long long a) {
  IntMatrix m(1, 1);
  m(0, 0) = Int(a);
  return m;
}

IntMatrix m2(long long a, long long b, long long c, long long d) {
  IntMatrix m(2, 2);
  m(0, 0) = Int(a);
  m(0, 1) = Int(b);
  m(1, 0) = Int(c);
  m(1, 1) = Int(d);
  return m;
}

long long phi(long long n) {
  long long c = 0;
  for (long long k = 1; k <= n; ++k)
    if (gcdInt(Int(k), Int(n)) == 1) ++c;
  return c;
}

}  // namespace

TEST_CASE("endomorphisms of mu_N match the modular arithmetic oracle") {
  for (long long N = 1; N <= 12; ++N) {
    GammaModel G = gamma({"1/" + std::to_string(N)});
    long long classes = 0, autos = 0;
    for (long long m = 0; m < N; ++m) {
      EndoClass f = inducedEndomorphism(G, m1(m));  // every power map descends
      ++classes;
      // no two residues mod N induce the same map
      for (long long m2v = 0; m2v < m; ++m2v) CHECK(!endoEquivalent(G, f.A, m1(m2v)));
      CHECK(endoEquivalent(G, f.A, m1(m + N)));  // shifting by N does nothing
      bool oracle = gcdInt(Int(m), Int(N)) == 1;
      CHECK(isAutomorphismClass(G, f.A) == oracle);
      if (oracle) ++autos;
    }
    CHECK(classes == N);
    CHECK(autos == phi(N));
  }
}

TEST_CASE("redundant presentations induce the same endomorphism monoid") {
  GammaModel G = gamma({"1/3", "2/3"});  // mu_3 on two generators
  EndoClass sq = inducedEndomorphism(G, m2(2, 0, 0, 2));
  CHECK(isAutomorphismClass(G, sq.A));
  EndoClass cube = inducedEndomorphism(G, m2(3, 0, 0, 3));  // the trivial map
  CHECK(!isAutomorphismClass(G, cube.A));
  CHECK(semiequivCheck(G, 2, sq.A));
  CHECK(semiequivCheck(G, 3, cube.A));
  // shifting a column by a relation vector does not change the induced map
  IntMatrix shifted = m2(2, 0, 0, 2);
  shifted(0, 0) += Int(1);
  shifted(1, 0) += Int(1);  // (1,1) is a relation of (1/3, 2/3)
  CHECK(endoEquivalent(G, sq.A, shifted));
  CHECK(semiequivCheck(G, 2, shifted));
  CHECK(!semiequivCheck(G, 1, shifted));
  // generator images land where the exponent arithmetic says
  CHECK(endoGeneratorImage(G, sq.A, 0).omega == cx("2/3"));
  CHECK(endoGeneratorImage(G, sq.A, 1).omega == cx("1/3"));  // 4/3 reduced
}

TEST_CASE("maps that break the relation lattice are rejected") {
  GammaModel G = gamma({"0+1*i", "1/2"});
  CHECK_THROWS_AS(inducedEndomorphism(G, m2(0, 1, 1, 0)), Error);  // swap tears mu_2 apart
  // doubling is fine on both generators
  EndoClass dbl = inducedEndomorphism(G, m2(2, 0, 0, 2));
  CHECK(!isAutomorphismClass(G, dbl.A));
  EndoClass neg = inducedEndomorphism(G, m2(-1, 0, 0, -1));
  CHECK(isAutomorphismClass(G, neg.A));
}

TEST_CASE("free cyclic groups admit only the power maps, invertible at +-1") {
  GammaModel G = gamma({"0+1*i"});
  CHECK(isAutomorphismClass(G, m1(1)));
  CHECK(isAutomorphismClass(G, m1(-1)));
  CHECK(!isAutomorphismClass(G, m1(2)));
  CHECK(!isAutomorphismClass(G, m1(0)));
  EndoClass two = inducedEndomorphism(G, m1(2));
  EndoClass three = inducedEndomorphism(G, m1(3));
  CHECK(endoEquivalent(G, composeEndo(G, two, three).A, m1(6)));
}

TEST_CASE("composition matches modular multiplication on mu_5") {
  GammaModel G = gamma({"1/5"});
  EndoClass a = inducedEndomorphism(G, m1(2));
  EndoClass b = inducedEndomorphism(G, m1(3));
  CHECK(endoEquivalent(G, composeEndo(G, a, b).A, m1(1)));  // 6 = 1 mod 5
  CHECK(endoEquivalent(G, composeEndo(G, a, a).A, m1(4)));
}

TEST_CASE("multiplier rings of elliptic quotients") {
  struct Case {
    std::string w;
    std::uint64_t d;
    long long A, B, C, disc;
  };
  std::vector<Case> cases = {
      {"0+1*i", 0, 1, 0, 1, -4},
      {"0+0+1*sqrt(2)*i", 2, 1, 0, 2, -8},
      {"1/2+0+1/2*sqrt(3)*i", 3, 1, -1, 1, -3},
      {"1/2+1*i", 0, 4, -4, 5, -64},
  };
  for (const auto& c : cases) {
    QuadComplex w = cx(c.w, c.d);
    CmRing r = cmRing(w);
    CHECK(r.nontrivial);
    CHECK(r.A == c.A);
    CHECK(r.B == c.B);
    CHECK(r.C == c.C);
    CHECK(r.disc == c.disc);
    // independent verification: the minimal polynomial really annihilates w,
    // is primitive, and has negative discriminant
    QuadComplex zero = Rational(r.A) * (w * w) + Rational(r.B) * w + Rational(r.C) * QuadComplex(QuadReal(1));
    CHECK(zero.isZero());
    CHECK(gcdInt(gcdInt(r.A, r.B), r.C) == 1);
    CHECK(r.disc == r.B * r.B - Int(4) * r.A * r.C);
    CHECK(r.disc < 0);
    CHECK(r.A > 0);
  }
  // a quartic period: no complex multiplication over any quadratic order
  CmRing triv = cmRing(cx("0+1*sqrt(2)+1*i", 2));
  CHECK(!triv.nontrivial);
  CHECK_THROWS_AS(cmRing(cx("1/2")), Error);  // real period has no elliptic quotient
}

TEST_CASE("realizable endomorphism families per regime") {
  {
    GammaModel G = gamma({"1"});
    RealizableFamily f = realizableEndomorphisms(G, classifyRegime(G));
    CHECK(f.kind == FamilyKind::AllMaps);
  }
  {
    GammaModel G = gamma({"1/5"});
    RealizableFamily f = realizableEndomorphisms(G, classifyRegime(G));
    CHECK(f.kind == FamilyKind::MuNPower);
    CHECK(f.N == 5);
  }
  {
    GammaModel G = gamma({"1/2+1*i"});
    RealizableFamily f = realizableEndomorphisms(G, classifyRegime(G));
    CHECK(f.kind == FamilyKind::EllipticOrder);
    REQUIRE(f.ring);
    CHECK(f.ring->nontrivial);
    CHECK(f.ring->disc == -64);
    CHECK(!f.appliesToFreeQuotient);
  }
  {
    GammaModel G = gamma({"0+1*i", "1/2"});
    RealizableFamily f = realizableEndomorphisms(G, classifyRegime(G));
    CHECK(f.kind == FamilyKind::PowerMaps);
    REQUIRE(f.ring);
    CHECK(f.ring->disc == -4);  // ring of the free quotient by the torsion
    CHECK(f.appliesToFreeQuotient);
  }
  {
    GammaModel G = gamma({"0+1*sqrt(2)"}, 2);
    RealizableFamily f = realizableEndomorphisms(G, classifyRegime(G));
    CHECK(f.kind == FamilyKind::PowerMaps);
    CHECK(!f.ring);
  }
}

TEST_CASE("automorphism 2-group algebra of the open substack") {
  GammaModel G = gamma({"0+1*i", "1/2"});
  AutElement id{QuadComplex(), 1};
  AutElement inv{QuadComplex(), -1};
  std::vector<AutElement> pool = {
      id,
      inv,
      AutElement{cx("1/4"), 1},
      AutElement{cx("0+1*i"), -1},
      AutElement{cx("1/3+2*i"), 1},
      AutElement{cx("-1/4"), -1},
  };
  for (const auto& x : pool) {
    CHECK(autEqual(G, composeAutOpen(G, x, autInverse(G, x)), id));
    CHECK(autEqual(G, composeAutOpen(G, autInverse(G, x), x), id));
    for (const auto& y : pool)
      for (const auto& z : pool) {
        AutElement l = composeAutOpen(G, composeAutOpen(G, x, y), z);
        AutElement r = composeAutOpen(G, x, composeAutOpen(G, y, z));
        CHECK(autEqual(G, l, r));
      }
  }
  // every lift of the inversion is an involution
  for (const auto& x : pool)
    if (x.eps == -1) CHECK(autEqual(G, composeAutOpen(G, x, x), id));
  // translations are identified exactly modulo the group
  CHECK(autEqual(G, AutElement{cx("1/4"), 1}, AutElement{cx("7/4+3*i"), 1}));
  CHECK(!autEqual(G, AutElement{cx("1/4"), 1}, AutElement{cx("1/3"), 1}));
  CHECK(!autEqual(G, AutElement{cx("1/4"), 1}, AutElement{cx("1/4"), -1}));
}

TEST_CASE("inversion swaps and negates inertia pairs") {
  GammaModel G = gamma({"0+2*i", "0+3*i"});
  auto moved = inertiaAction(G, -1, {cx("0+2*i"), cx("0+3*i")});
  CHECK(moved.first.omega == cx("0-3*i"));
  CHECK(moved.second.omega == cx("0-2*i"));
  auto fixed = inertiaAction(G, 1, {cx("0+2*i"), cx("0+3*i")});
  CHECK(fixed.first.omega == cx("0+2*i"));
  CHECK(fixed.second.omega == cx("0+3*i"));
  CHECK_THROWS_AS(inertiaAction(G, -1, {cx("1/2"), cx("0+1*i")}), Error);
}

TEST_CASE("Kummer refinement and pushforward") {
  GammaModel G = makeGamma(FieldContext::rationals(), {cx("0+1*i")}, {});
  {
    GammaModel ref = kummerRefine(G, Int(2));
    Regime r = classifyRegime(ref);
    CHECK(r.kind == RegimeKind::ProperCyclic);
    CHECK(r.torsionN == 2);
    CHECK(r.q->omega == cx("0+1*i"));
    CHECK(ref.invariants.freeRank == 1);
    CHECK(ref.invariants.torsion == std::vector<Int>{Int(2)});
  }
  {
    GammaModel mu3 = gamma({"1/3"});
    GammaModel ref = kummerRefine(mu3, Int(2));
    Regime r = classifyRegime(ref);
    CHECK(r.kind == RegimeKind::TorsionMuN);
    CHECK(r.torsionN == 6);
  }
  {
    GammaModel push = kummerPushforward(G, Int(3));
    CHECK(push.residueCount == 1);
    CHECK(push.gens[0].omega == cx("0+3*i"));
    Regime r = classifyRegime(push);
    CHECK(r.q->omega == cx("0+3*i"));
  }
  CHECK_THROWS_AS(kummerRefine(G, Int(0)), Error);
  CHECK_THROWS_AS(kummerRefine(G, Int(-2)), Error);
}
