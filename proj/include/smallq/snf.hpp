#pragma once

#include "smallq/matrix.hpp"

namespace smallq {

// Smith decomposition M = P * S * Q with P, Q unimodular, S diagonal with
// nonnegative entries and S(i,i) | S(j,j) for i < j.
struct SmithDecomposition {
  IntMatrix P, S, Q;

  std::vector<Int> diagonal() const {
    std::vector<Int> d(std::min(S.rows(), S.cols()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = S(i, i);
    return d;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    for (const Int& d : diagonal())
      if (d != 0) ++r;
    return r;
  }
};

namespace detail {

struct SnfOps {
  // Maintains M = P * A * Q while A is reduced in place.
  IntMatrix* P;
  IntMatrix* Q;

  void swap_rows(IntMatrix& A, std::size_t i, std::size_t j) {
    A.swap_rows(i, j);
    P->swap_cols(i, j);
  }
  void swap_cols(IntMatrix& A, std::size_t i, std::size_t j) {
    A.swap_cols(i, j);
    Q->swap_rows(i, j);
  }
  // row_i += c * row_j
  void add_row(IntMatrix& A, std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < A.cols(); ++k) A(i, k) += c * A(j, k);
    for (std::size_t k = 0; k < P->rows(); ++k) (*P)(k, j) -= c * (*P)(k, i);
  }
  // col_j += c * col_i
  void add_col(IntMatrix& A, std::size_t j, std::size_t i, const Int& c) {
    for (std::size_t k = 0; k < A.rows(); ++k) A(k, j) += c * A(k, i);
    for (std::size_t k = 0; k < Q->cols(); ++k) (*Q)(i, k) -= c * (*Q)(j, k);
  }
  void negate_row(IntMatrix& A, std::size_t i) {
    for (std::size_t k = 0; k < A.cols(); ++k) A(i, k) = -A(i, k);
    for (std::size_t k = 0; k < P->rows(); ++k) (*P)(k, i) = -(*P)(k, i);
  }
};

}  // namespace detail

// Elimination with pivoting on the smallest nonzero entry; total on integer
// matrices, rank deficiency yields trailing zero diagonal entries.
inline SmithDecomposition smith_normal_form(const IntMatrix& M) {
  std::size_t n = M.rows(), m = M.cols();
  IntMatrix A = M;
  SmithDecomposition out;
  out.P = IntMatrix::identity(n);
  out.Q = IntMatrix::identity(m);
  detail::SnfOps ops{&out.P, &out.Q};

  std::size_t t = 0;
  while (t < n && t < m) {
    bool done = false;
    while (!done) {
      // Pivot: smallest nonzero |entry| of the trailing submatrix, re-selected
      // after every sweep so remainders become the next pivot.
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j) {
          if (A(i, j) == 0) continue;
          if (!found || abs_int(A(i, j)) < abs_int(A(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        out.S = A;
        return out;
      }
      if (pi != t) ops.swap_rows(A, pi, t);
      if (pj != t) ops.swap_cols(A, pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (A(i, t) == 0) continue;
        Int q = floor_div(A(i, t), A(t, t));
        if (q != 0) ops.add_row(A, i, t, -q);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (A(t, j) == 0) continue;
        Int q = floor_div(A(t, j), A(t, t));
        if (q != 0) ops.add_col(A, j, t, -q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce that the pivot divides every remaining entry.
      done = true;
      for (std::size_t i = t + 1; i < n && done; ++i)
        for (std::size_t j = t + 1; j < m && done; ++j)
          if (A(i, j) % A(t, t) != 0) {
            ops.add_row(A, t, i, 1);
            done = false;
          }
    }
    if (A(t, t) < 0) ops.negate_row(A, t);
    ++t;
  }
  out.S = A;
  return out;
}

inline std::vector<Int> invariant_factors(const IntMatrix& M) {
  return smith_normal_form(M).diagonal();
}

}  // namespace smallq
