#include "cstar/intlinalg.hpp"

namespace cstar {

namespace {

// simultaneous unimodular row operation on M and U:
//   (row_a, row_b) <- (s*row_a + t*row_b, u*row_a + v*row_b),  sv - tu = +-1
void rowOp2(IntMatrix& M, IntMatrix& U, Index a, Index b, const Int& s, const Int& t,
            const Int& u, const Int& v) {
  IntMatrix::RowXpr::PlainObject ma = M.row(a), mb = M.row(b);
  M.row(a) = s * ma + t * mb;
  M.row(b) = u * ma + v * mb;
  IntMatrix::RowXpr::PlainObject ua = U.row(a), ub = U.row(b);
  U.row(a) = s * ua + t * ub;
  U.row(b) = u * ua + v * ub;
}

}  // namespace

HnfResult hnf(IntMatrix M) {
  const Index m = M.rows();
  const Index n = M.cols();
  IntMatrix U = IntMatrix::Identity(m, m);
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index piv = -1;
    for (Index i = r; i < m; ++i)
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      M.row(piv).swap(M.row(r));
      U.row(piv).swap(U.row(r));
    }
    for (Index i = r + 1; i < m; ++i) {
      if (M(i, c) == 0) continue;
      XGcd e = xgcd(M(r, c), M(i, c));
      Int a = M(r, c) / e.g;
      Int b = M(i, c) / e.g;
      // det = s*a + t*b = (s*M(r,c) + t*M(i,c))/g = 1
      rowOp2(M, U, r, i, e.s, e.t, -b, a);
    }
    if (M(r, c) < 0) {
      M.row(r) = -M.row(r);
      U.row(r) = -U.row(r);
    }
    for (Index i = 0; i < r; ++i) {
      Int q = floorDiv(M(i, c), M(r, c));
      if (q != 0) {
        M.row(i) -= q * M.row(r);
        U.row(i) -= q * U.row(r);
      }
    }
    ++r;
  }
  return {std::move(M), std::move(U), r};
}

std::vector<Int> snf(IntMatrix A) {
  const Index m = A.rows();
  const Index n = A.cols();
  Index k = 0;
  while (k < m && k < n) {
    // locate any nonzero entry of the trailing block
    Index pi = -1, pj = -1;
    for (Index i = k; i < m && pi < 0; ++i)
      for (Index j = k; j < n; ++j)
        if (A(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    A.row(pi).swap(A.row(k));
    A.col(pj).swap(A.col(k));

    for (;;) {
      // kill column k below the pivot; a plain subtraction suffices when the
      // pivot divides the entry (and, unlike the gcd mix, cannot disturb row k)
      for (Index i = k + 1; i < m; ++i) {
        if (A(i, k) == 0) continue;
        if (A(i, k) % A(k, k) == 0) {
          A.row(i) -= (A(i, k) / A(k, k)) * A.row(k);
          continue;
        }
        XGcd e = xgcd(A(k, k), A(i, k));
        Int a = A(k, k) / e.g;
        Int b = A(i, k) / e.g;
        IntMatrix::RowXpr::PlainObject rk = A.row(k), ri = A.row(i);
        A.row(k) = e.s * rk + e.t * ri;
        A.row(i) = -b * rk + a * ri;
      }
      // kill row k right of the pivot
      bool colDirty = false;
      for (Index j = k + 1; j < n; ++j) {
        if (A(k, j) == 0) continue;
        if (A(k, j) % A(k, k) == 0) {
          A.col(j) -= (A(k, j) / A(k, k)) * A.col(k);
          continue;
        }
        XGcd e = xgcd(A(k, k), A(k, j));
        Int a = A(k, k) / e.g;
        Int b = A(k, j) / e.g;
        IntMatrix::ColXpr::PlainObject ck = A.col(k), cj = A.col(j);
        A.col(k) = e.s * ck + e.t * cj;
        A.col(j) = -b * ck + a * cj;
        colDirty = true;
      }
      if (colDirty) continue;  // gcd mixing may have refilled column k
      // pivot must divide the whole trailing block for the divisibility chain
      Index bi = -1;
      for (Index i = k + 1; i < m && bi < 0; ++i)
        for (Index j = k + 1; j < n; ++j)
          if (A(i, j) % A(k, k) != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      A.row(k) += A.row(bi);
    }
    if (A(k, k) < 0) A.row(k) = -A.row(k);
    ++k;
  }
  std::vector<Int> d;
  for (Index i = 0; i < k; ++i)
    if (A(i, i) != 0) d.push_back(A(i, i));
  return d;
}

Lattice latticeFromRows(const IntMatrix& rows, Index ambient) {
  if (rows.cols() != ambient && rows.rows() != 0)
    fail(Err::DimensionMismatch, "lattice rows vs ambient rank");
  if (rows.rows() == 0) return Lattice{ambient, IntMatrix(0, ambient)};
  HnfResult h = hnf(rows);
  return Lattice{ambient, h.H.topRows(h.rank)};
}

Lattice latticeSum(const Lattice& a, const Lattice& b) {
  if (a.ambient != b.ambient) fail(Err::DimensionMismatch, "lattice sum");
  IntMatrix stacked(a.basis.rows() + b.basis.rows(), a.ambient);
  if (a.basis.rows() > 0) stacked.topRows(a.basis.rows()) = a.basis;
  if (b.basis.rows() > 0) stacked.bottomRows(b.basis.rows()) = b.basis;
  return latticeFromRows(stacked, a.ambient);
}

bool latticeContains(const Lattice& L, IntVector v) {
  if (v.size() != L.ambient) fail(Err::DimensionMismatch, "lattice membership");
  for (Index i = 0; i < L.basis.rows(); ++i) {
    // pivot column of basis row i
    Index p = 0;
    while (p < L.ambient && L.basis(i, p) == 0) ++p;
    if (p == L.ambient) fail(Err::Internal, "zero basis row in lattice");
    if (v(p) == 0) continue;
    if (v(p) % L.basis(i, p) != 0) return false;
    Int q = v(p) / L.basis(i, p);
    v -= q * L.basis.row(i).transpose();
  }
  for (Index j = 0; j < v.size(); ++j)
    if (v(j) != 0) return false;
  return true;
}

bool isFullLattice(const Lattice& L) {
  if (L.rank() != L.ambient) return false;
  return L.basis == IntMatrix::Identity(L.ambient, L.ambient);
}

bool preservesLattice(const IntMatrix& A, const Lattice& L) {
  if (A.rows() != A.cols() || A.rows() != L.ambient)
    fail(Err::DimensionMismatch, "endomorphism vs lattice ambient rank");
  for (Index i = 0; i < L.basis.rows(); ++i) {
    IntVector image = A * L.basis.row(i).transpose();
    if (!latticeContains(L, image)) return false;
  }
  return true;
}

QuotientInvariants quotientInvariants(const Lattice& L) {
  QuotientInvariants q;
  q.freeRank = L.ambient - L.rank();
  for (const Int& d : snf(L.basis))
    if (d > 1) q.torsion.push_back(d);
  return q;
}

RatMatrix rationalizeForms(const QuadMatrix& forms) {
  RatMatrix out(2 * forms.rows(), forms.cols());
  for (Index i = 0; i < forms.rows(); ++i)
    for (Index j = 0; j < forms.cols(); ++j) {
      out(2 * i, j) = forms(i, j).rationalPart();
      out(2 * i + 1, j) = forms(i, j).quadPart();
    }
  return out;
}

Lattice integerKernel(const RatMatrix& forms, Index n) {
  if (forms.rows() > 0 && forms.cols() != n)
    fail(Err::DimensionMismatch, "kernel forms vs ambient rank");
  // scale every form to integer coefficients (same kernel)
  IntMatrix A(forms.rows(), n);
  for (Index i = 0; i < forms.rows(); ++i) {
    Int d = 1;
    for (Index j = 0; j < n; ++j) d = lcmInt(d, den(forms(i, j)));
    for (Index j = 0; j < n; ++j) A(i, j) = num(forms(i, j)) * (d / den(forms(i, j)));
  }
  // rows v of U with v * A^T = 0 span {v : A v = 0}; a kernel into a
  // torsion-free group is automatically saturated
  IntMatrix At = A.transpose();
  HnfResult h = hnf(At);
  IntMatrix ker = h.U.bottomRows(n - h.rank);
  return latticeFromRows(ker, n);
}

Lattice integerKernel(const QuadMatrix& forms, Index n) {
  return integerKernel(rationalizeForms(forms), n);
}

bool inRationalRowSpanZ(const RatMatrix& rows, const RatVector& target) {
  if (rows.rows() > 0 && rows.cols() != target.size())
    fail(Err::DimensionMismatch, "row span membership");
  const Index n = target.size();
  IntMatrix M(rows.rows(), n);
  IntVector t(n);
  for (Index j = 0; j < n; ++j) {
    Int d = den(target(j));
    for (Index i = 0; i < rows.rows(); ++i) d = lcmInt(d, den(rows(i, j)));
    for (Index i = 0; i < rows.rows(); ++i) M(i, j) = num(rows(i, j)) * (d / den(rows(i, j)));
    t(j) = num(target(j)) * (d / den(target(j)));
  }
  return latticeContains(latticeFromRows(M, n), t);
}

}  // namespace cstar
