#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "cstar/intlinalg.hpp"

using namespace cstar;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()),
              rows.size() ? static_cast<Index>(rows.begin()->size()) : 0);
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long long v : r) m(i, j++) = Int(v);
    ++i;
  }
  return m;
}

IntVector vec(std::initializer_list<long long> vals) {
  IntVector v(static_cast<Index>(vals.size()));
  Index i = 0;
  for (long long x : vals) v(i++) = Int(x);
  return v;
}

// tiny deterministic generator for the randomized property checks
std::uint64_t rngState = 0x9e3779b97f4a7c15ULL;
long long nextSmall(long long lo, long long hi) {
  rngState = rngState * 6364136223846793005ULL + 1442695040888963407ULL;
  return lo + static_cast<long long>((rngState >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
}

// independent membership oracle: enumerate integer combinations of the rows
bool bruteContains(const IntMatrix& rows, const IntVector& v, long long range) {
  Index k = rows.rows();
  std::vector<long long> c(static_cast<std::size_t>(k), -range);
  if (k == 0) return v.isZero(0);
  while (true) {
    IntVector acc = IntVector::Zero(v.size());
    for (Index i = 0; i < k; ++i)
      acc += Int(c[static_cast<std::size_t>(i)]) * rows.row(i).transpose();
    if (acc == v) return true;
    Index i = 0;
    while (i < k && c[static_cast<std::size_t>(i)] == range) c[static_cast<std::size_t>(i++)] = -range;
    if (i == k) return false;
    ++c[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TEST_CASE("hermite form of a worked example") {
  IntMatrix M = mat({{2, 4}, {6, 8}});
  HnfResult h = hnf(M);
  CHECK(h.rank == 2);
  CHECK(h.H == mat({{2, 0}, {0, 4}}));
  CHECK(h.U * M == h.H);
}

TEST_CASE("hermite form is a canonical lattice representative") {
  for (int trial = 0; trial < 60; ++trial) {
    Index r = 1 + static_cast<Index>(nextSmall(0, 2));
    Index n = 2 + static_cast<Index>(nextSmall(0, 2));
    IntMatrix M(r, n);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < n; ++j) M(i, j) = Int(nextSmall(-5, 5));
    HnfResult h = hnf(M);
    CHECK(h.U * M == h.H);
    // zero rows last, pivots positive and strictly to the right of the previous
    Index lastPivot = -1;
    for (Index i = 0; i < h.rank; ++i) {
      Index p = 0;
      while (p < n && h.H(i, p) == 0) ++p;
      CHECK(p < n);
      CHECK(p > lastPivot);
      CHECK(h.H(i, p) > 0);
      for (Index k = 0; k < i; ++k) {
        CHECK(h.H(k, p) >= 0);
        CHECK(h.H(k, p) < h.H(i, p));
      }
      lastPivot = p;
    }
    for (Index i = h.rank; i < r; ++i) CHECK(h.H.row(i).isZero(0));
    // same span both ways: every original row is in the lattice and vice versa
    Lattice L = latticeFromRows(M, n);
    for (Index i = 0; i < r; ++i) CHECK(latticeContains(L, M.row(i).transpose()));
    Lattice L2 = latticeFromRows(h.H, n);
    CHECK(L == L2);
  }
}

TEST_CASE("smith invariant factors") {
  CHECK(snf(mat({{2, 0}, {0, 4}})) == std::vector<Int>{Int(2), Int(4)});
  CHECK(snf(mat({{4, 0}, {0, 2}})) == std::vector<Int>{Int(2), Int(4)});
  CHECK(snf(mat({{2, 4}, {6, 8}})) == std::vector<Int>{Int(2), Int(4)});
  CHECK(snf(mat({{3}})) == std::vector<Int>{Int(3)});
  CHECK(snf(mat({{1, 2}, {2, 4}})) == std::vector<Int>{Int(1)});
  CHECK(snf(IntMatrix::Zero(2, 3)).empty());
  // divisibility chain on random inputs
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix M(3, 3);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j) M(i, j) = Int(nextSmall(-6, 6));
    std::vector<Int> d = snf(M);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    for (const Int& x : d) CHECK(x >= 1);
  }
}

TEST_CASE("lattice membership agrees with brute-force enumeration") {
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix rows(2, 3);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 3; ++j) rows(i, j) = Int(nextSmall(-3, 3));
    Lattice L = latticeFromRows(rows, 3);
    for (int probe = 0; probe < 8; ++probe) {
      IntVector v = vec({nextSmall(-6, 6), nextSmall(-6, 6), nextSmall(-6, 6)});
      CHECK(latticeContains(L, v) == bruteContains(rows, v, 8));
    }
  }
}

TEST_CASE("lattice sums, including empty summands") {
  Lattice a = latticeFromRows(mat({{2, 0}}), 2);
  Lattice b = latticeFromRows(mat({{0, 4}}), 2);
  Lattice empty = latticeFromRows(IntMatrix(0, 2), 2);
  CHECK(latticeSum(a, b) == latticeFromRows(mat({{2, 0}, {0, 4}}), 2));
  CHECK(latticeSum(a, empty) == a);
  CHECK(latticeSum(empty, empty).rank() == 0);
  CHECK(isFullLattice(latticeSum(latticeFromRows(mat({{1, 0}}), 2),
                                 latticeFromRows(mat({{0, 1}}), 2))));
  CHECK(!isFullLattice(latticeSum(a, b)));
}

TEST_CASE("quotient structure") {
  QuotientInvariants q1 = quotientInvariants(latticeFromRows(mat({{2, 0}, {0, 4}}), 2));
  CHECK(q1.freeRank == 0);
  CHECK(q1.torsion == std::vector<Int>{Int(2), Int(4)});
  QuotientInvariants q2 = quotientInvariants(latticeFromRows(mat({{1, 2}}), 2));
  CHECK(q2.freeRank == 1);
  CHECK(q2.torsion.empty());
  QuotientInvariants q3 = quotientInvariants(latticeFromRows(mat({{2, 4}}), 2));
  CHECK(q3.freeRank == 1);
  CHECK(q3.torsion == std::vector<Int>{Int(2)});
  QuotientInvariants q4 = quotientInvariants(latticeFromRows(IntMatrix(0, 3), 3));
  CHECK(q4.freeRank == 3);
  CHECK(q4.torsion.empty());
}

TEST_CASE("endomorphism condition on a lattice") {
  Lattice L = latticeFromRows(mat({{2, 0}, {0, 4}}), 2);
  CHECK(preservesLattice(mat({{1, 1}, {0, 1}}), L));
  CHECK(!preservesLattice(mat({{0, 1}, {1, 0}}), L));
  CHECK(preservesLattice(mat({{1, 0}, {2, 1}}), L));  // shear along the finer direction
}

TEST_CASE("integer kernels of exact forms are saturated") {
  FieldContext F = FieldContext::make(2);
  QuadReal s2 = QuadReal::sqrtD(F);

  {
    QuadMatrix forms(1, 2);
    forms(0, 0) = QuadReal(1);
    forms(0, 1) = s2;
    Lattice K = integerKernel(forms, 2);
    CHECK(K.rank() == 0);  // 1 and sqrt(2) are Q-independent
  }
  {
    RatMatrix forms(1, 2);
    forms(0, 0) = Rational(1);
    forms(0, 1) = Rational(2);
    Lattice K = integerKernel(forms, 2);
    CHECK(K.basis == mat({{2, -1}}));
  }
  {
    RatMatrix forms(1, 2);
    forms(0, 0) = Rational(2);
    forms(0, 1) = Rational(4);
    Lattice K = integerKernel(forms, 2);
    CHECK(K.basis == mat({{2, -1}}));  // saturated: (2,-1), not (4,-2)
  }
  {
    QuadMatrix forms(1, 3);
    forms(0, 0) = QuadReal(1);
    forms(0, 1) = QuadReal(1);
    forms(0, 2) = s2;
    Lattice K = integerKernel(forms, 3);
    CHECK(K.basis == mat({{1, -1, 0}}));
  }
  {
    RatMatrix forms(1, 2);
    forms(0, 0) = Rational(1, 2);
    forms(0, 1) = Rational(1, 3);
    Lattice K = integerKernel(forms, 2);
    CHECK(K.basis == mat({{2, -3}}));
  }
}

TEST_CASE("field elimination over a quadratic field") {
  FieldContext F = FieldContext::make(2);
  QuadReal s2 = QuadReal::sqrtD(F);
  QuadMatrix A(2, 2);
  A(0, 0) = QuadReal(1);
  A(0, 1) = s2;
  A(1, 0) = s2;
  A(1, 1) = QuadReal(2);
  CHECK(rankField<QuadReal>(A) == 1);
  QuadMatrix ns = nullspaceField<QuadReal>(A);
  REQUIRE(ns.rows() == 1);
  for (Index i = 0; i < 2; ++i) {
    QuadReal acc = A(i, 0) * ns(0, 0) + A(i, 1) * ns(0, 1);
    CHECK(acc.isZero());
  }
}

TEST_CASE("integral combinations of rational rows") {
  RatMatrix rows(2, 2);
  rows(0, 0) = Rational(1, 2);
  rows(0, 1) = Rational(0);
  rows(1, 0) = Rational(0);
  rows(1, 1) = Rational(1, 3);
  RatVector yes(2), no(2);
  yes(0) = Rational(3, 2);
  yes(1) = Rational(2, 3);
  no(0) = Rational(1, 2);
  no(1) = Rational(1, 6);
  CHECK(inRationalRowSpanZ(rows, yes));
  CHECK(!inRationalRowSpanZ(rows, no));
}
