#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "sepcat/errors.hpp"
#include "sepcat/scalar.hpp"

namespace sepcat {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
struct RrefResult {
  Matrix<S> reduced;
  Index rank = 0;
  std::vector<Index> pivot_cols;
};

/// Entry-wise zero test, without the tolerance machinery of isZero().
template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

/// Shape and entry-wise equality.
template <class A, class B>
bool equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

template <class S>
Matrix<S> zeros(Index rows, Index cols) {
  return Matrix<S>::Zero(rows, cols);
}

template <class S>
Matrix<S> identity(Index n) {
  return Matrix<S>::Identity(n, n);
}

/// Reduced row echelon form. Pivots are the first nonzero entry found
/// scanning columns left to right (no magnitude pivoting).
template <class S>
RrefResult<S> rref(Matrix<S> m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  RrefResult<S> out;
  std::vector<Index> support;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));

    const S inv = S(1) / m(r, c);
    support.clear();
    for (Index j = c; j < cols; ++j) {
      if (!is_zero(m(r, j))) {
        m(r, j) *= inv;
        support.push_back(j);
      }
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S factor = m(i, c);
      for (Index j : support) m(i, j) -= factor * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

/// Rank by forward elimination only.
template <class S>
Index rank(Matrix<S> m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> support;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const S inv = S(1) / m(r, c);
    support.clear();
    for (Index j = c + 1; j < cols; ++j) {
      if (!is_zero(m(r, j))) support.push_back(j);
    }
    for (Index i = r + 1; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      const S factor = m(i, c) * inv;
      for (Index j : support) m(i, j) -= factor * m(r, j);
      m(i, c) = S(0);
    }
    ++r;
  }
  return r;
}

/// One solution of a·X = b for every column of b simultaneously, with free
/// variables set to zero; nullopt if any column is inconsistent.
template <class S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("solve: " + std::to_string(a.rows()) + " equations but right-hand side has " +
                            std::to_string(b.rows()) + " rows");
  }
  const Index n = a.cols();
  Matrix<S> aug(a.rows(), n + b.cols());
  aug << a, b;
  const RrefResult<S> red = rref<S>(std::move(aug));
  Matrix<S> x = zeros<S>(n, b.cols());
  for (Index i = 0; i < red.rank; ++i) {
    const Index pc = red.pivot_cols[static_cast<std::size_t>(i)];
    if (pc >= n) return std::nullopt;
    x.row(pc) = red.reduced.block(i, n, 1, b.cols());
  }
  return x;
}

/// Standard free-variable kernel basis: one column per non-pivot column c of
/// rref(a), with a 1 in position c and zeros at the other free positions.
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& a) {
  const RrefResult<S> red = rref<S>(a);
  const Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index pc : red.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
  Matrix<S> k = zeros<S>(n, n - red.rank);
  Index col = 0;
  for (Index j = 0; j < n; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    k(j, col) = S(1);
    for (Index i = 0; i < red.rank; ++i) {
      const S& v = red.reduced(i, j);
      if (!is_zero(v)) k(red.pivot_cols[static_cast<std::size_t>(i)], col) = -v;
    }
    ++col;
  }
  return k;
}

/// Columns of `a` at its pivot positions: a basis of the column space.
template <class S>
Matrix<S> column_space_basis(const Matrix<S>& a) {
  const RrefResult<S> red = rref<S>(a);
  Matrix<S> out(a.rows(), red.rank);
  for (Index i = 0; i < red.rank; ++i) out.col(i) = a.col(red.pivot_cols[static_cast<std::size_t>(i)]);
  return out;
}

/// Coordinates of the columns of `v` in the linearly independent columns of
/// `basis`. Throws InternalError if some column is outside the span.
template <class S>
Matrix<S> coordinates_in(const Matrix<S>& basis, const Matrix<S>& v) {
  auto x = solve<S>(basis, v);
  if (!x) throw InternalError("vector outside the expected subspace");
  return *std::move(x);
}

/// Product a·b that skips zero entries of a; cheaper than the dense kernel
/// for the sparse structure matrices built here.
template <class S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()));
  }
  Matrix<S> out = zeros<S>(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k) {
    for (Index i = 0; i < a.rows(); ++i) {
      const S& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        const S& bkj = b(k, j);
        if (!is_zero(bkj)) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

/// Kronecker product; entry ((i·p + k), (j·q + l)) = a(i,j)·b(k,l).
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out = zeros<S>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (is_zero(a(i, j))) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Some right inverse r of a surjective a (a·r = I), via solve.
template <class S>
Matrix<S> right_inverse(const Matrix<S>& a) {
  auto r = solve<S>(a, identity<S>(a.rows()));
  if (!r) throw InternalError("right_inverse: matrix is not surjective");
  return *std::move(r);
}

/// Some left inverse l of an injective a (l·a = I).
template <class S>
Matrix<S> left_inverse(const Matrix<S>& a) {
  const Matrix<S> t = a.transpose();
  return right_inverse<S>(t).transpose();
}

}  // namespace sepcat
