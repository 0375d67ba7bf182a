#pragma once

// Exact linear algebra over Z, Q and Q(sqrt(d)): Hermite/Smith normal forms,
// saturated integer kernels, lattice membership.  Dense Eigen matrices
// templated on the exact scalar; reductions are classical row operations
// with extended-gcd pivoting, so no entry ever leaves the ring.

#include <Eigen/Core>

#include <vector>

#include "cstar/error.hpp"
#include "cstar/numeric.hpp"
#include "cstar/quad.hpp"

namespace Eigen {

// QuadReal is an exact field scalar; Eigen only needs the bookkeeping bits.
template <>
struct NumTraits<cstar::QuadReal> {
  using Real = cstar::QuadReal;
  using NonInteger = cstar::QuadReal;
  using Nested = cstar::QuadReal;
  using Literal = cstar::QuadReal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace cstar {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Int>;
using IntVector = Vec<Int>;
using RatMatrix = Mat<Rational>;
using RatVector = Vec<Rational>;
using QuadMatrix = Mat<QuadReal>;
using QuadVector = Vec<QuadReal>;

using Eigen::Index;

// --- Hermite normal form (row style) ---------------------------------------
//
// H = U * M with U unimodular; nonzero rows of H first, pivots positive,
// entries above a pivot reduced into [0, pivot).

struct HnfResult {
  IntMatrix H;
  IntMatrix U;
  Index rank = 0;
};

HnfResult hnf(IntMatrix M);

// Nonzero invariant factors d_1 | d_2 | ... (all >= 1) of the Z-module map
// given by M; empty for the zero matrix.
std::vector<Int> snf(IntMatrix M);

// --- Lattices ----------------------------------------------------------------

// A sublattice of Z^ambient; `basis` rows are independent and in HNF, so two
// lattices are equal iff their representations are identical.
struct Lattice {
  Index ambient = 0;
  IntMatrix basis;  // rank() x ambient

  Index rank() const { return basis.rows(); }
  bool operator==(const Lattice& o) const {
    return ambient == o.ambient && basis.rows() == o.basis.rows() && basis == o.basis;
  }
};

Lattice latticeFromRows(const IntMatrix& rows, Index ambient);
Lattice latticeSum(const Lattice& a, const Lattice& b);
bool latticeContains(const Lattice& L, IntVector v);
bool isFullLattice(const Lattice& L);

// v |-> A v maps L into L?  (basis rows are transposed to columns)
bool preservesLattice(const IntMatrix& A, const Lattice& L);

struct QuotientInvariants {
  Index freeRank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility chain
  bool operator==(const QuotientInvariants&) const = default;
};

// Structure of Z^ambient / L.
QuotientInvariants quotientInvariants(const Lattice& L);

// --- Integer kernels ----------------------------------------------------------
//
// {v in Z^n : F v = 0} for forms F with rational or quadratic coefficients.
// The result is saturated (it is the kernel of a map into a torsion-free
// group), and canonicalized through HNF.

Lattice integerKernel(const RatMatrix& forms, Index n);
Lattice integerKernel(const QuadMatrix& forms, Index n);

// Splits quadratic-coefficient forms into their two rational coordinate rows
// (the {1, sqrt(d)} components); integer points satisfy a quad form iff they
// satisfy both pieces.
RatMatrix rationalizeForms(const QuadMatrix& forms);

// Is `target` an integer combination of `rows`?  Columns are scaled to a
// common denominator first, which changes nothing about integral solvability.
bool inRationalRowSpanZ(const RatMatrix& rows, const RatVector& target);

// --- Field elimination (templated over exact field scalars) -------------------

template <class S>
struct Rref {
  Mat<S> mat;
  std::vector<Index> pivots;
};

template <class S>
Rref<S> rref(Mat<S> A) {
  Rref<S> out;
  Index r = 0;
  for (Index c = 0; c < A.cols() && r < A.rows(); ++c) {
    Index piv = -1;
    for (Index i = r; i < A.rows(); ++i)
      if (!(A(i, c) == S(0))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (Index j = 0; j < A.cols(); ++j) std::swap(A(r, j), A(piv, j));
    S p = A(r, c);
    for (Index j = 0; j < A.cols(); ++j) A(r, j) = A(r, j) / p;
    for (Index i = 0; i < A.rows(); ++i) {
      if (i == r || A(i, c) == S(0)) continue;
      S f = A(i, c);
      for (Index j = 0; j < A.cols(); ++j) A(i, j) = A(i, j) - f * A(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.mat = std::move(A);
  return out;
}

template <class S>
Index rankField(const Mat<S>& A) {
  return static_cast<Index>(rref<S>(A).pivots.size());
}

// Basis (as rows) of {v : A v = 0} over the coefficient field.
template <class S>
Mat<S> nullspaceField(const Mat<S>& A) {
  Rref<S> R = rref<S>(A);
  Index n = A.cols();
  std::vector<bool> isPivot(static_cast<std::size_t>(n), false);
  for (Index c : R.pivots) isPivot[static_cast<std::size_t>(c)] = true;
  Index nfree = n - static_cast<Index>(R.pivots.size());
  Mat<S> basis(nfree, n);
  for (Index i = 0; i < nfree; ++i)
    for (Index j = 0; j < n; ++j) basis(i, j) = S(0);
  Index row = 0;
  for (Index f = 0; f < n; ++f) {
    if (isPivot[static_cast<std::size_t>(f)]) continue;
    basis(row, f) = S(1);
    for (std::size_t i = 0; i < R.pivots.size(); ++i)
      basis(row, R.pivots[i]) = -R.mat(static_cast<Index>(i), f);
    ++row;
  }
  return basis;
}

}  // namespace cstar
