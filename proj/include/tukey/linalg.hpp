// Exact dense linear algebra on Eigen matrices.
//
// Everything here is templated on the scalar and works for Integer (through
// fraction-free Bareiss elimination) and Rational alike. Pivots are chosen by
// exact nonzero tests, so the routines are only meaningful for exact scalars.
#pragma once

#include "tukey/numeric.hpp"

#include <utility>
#include <vector>

namespace tukey {

/// Determinant via Bareiss elimination. Divisions are exact for integers.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> m) {
  const Index n = m.rows();
  if (m.cols() != n) throw PreconditionError("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return Scalar(0);
      m.row(k).swap(m.row(r));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Rank and pivot columns of a fraction-free row echelon form.
template <typename Scalar>
std::pair<Index, std::vector<Index>> rank_and_pivots(Matrix<Scalar> m) {
  std::vector<Index> pivots;
  Index r = 0;
  Scalar prev(1);
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index i = r;
    while (i < m.rows() && m(i, c) == 0) ++i;
    if (i == m.rows()) continue;
    if (i != r) m.row(i).swap(m.row(r));
    for (Index row = r + 1; row < m.rows(); ++row) {
      for (Index j = c + 1; j < m.cols(); ++j)
        m(row, j) = (m(row, j) * m(r, c) - m(row, c) * m(r, j)) / prev;
      m(row, c) = 0;
    }
    prev = m(r, c);
    pivots.push_back(c);
    ++r;
  }
  return {r, std::move(pivots)};
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& m) {
  return rank_and_pivots(m).first;
}

/// Stacks vectors as the rows of a matrix.
template <typename Scalar>
Matrix<Scalar> stack_rows(const std::vector<Vector<Scalar>>& rows, Index cols) {
  Matrix<Scalar> m(static_cast<Index>(rows.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) m.row(i) = rows[static_cast<std::size_t>(i)].transpose();
  return m;
}

/// Generalized cross product of the d-1 rows of `rows` (a (d-1) x d matrix):
/// the vector r with r.dot(v) == det([rows; v]) for every v. Zero iff the rows
/// are linearly dependent.
template <typename Scalar>
Vector<Scalar> cross(const Matrix<Scalar>& rows) {
  const Index d = rows.cols();
  if (rows.rows() != d - 1) throw PreconditionError("cross product needs d-1 vectors in R^d");
  Vector<Scalar> r(d);
  Matrix<Scalar> minor(d - 1, d - 1);
  for (Index k = 0; k < d; ++k) {
    for (Index j = 0, col = 0; j < d; ++j) {
      if (j == k) continue;
      minor.col(col++) = rows.col(j);
    }
    const Scalar det = determinant(minor);
    r[k] = ((d - 1 + k) % 2 == 0) ? det : Scalar(-det);
  }
  return r;
}

/// Reduced row echelon form over a field; returns the pivot columns.
template <typename Scalar>
std::vector<Index> reduce_rows(Matrix<Scalar>& m) {
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index i = r;
    while (i < m.rows() && m(i, c) == 0) ++i;
    if (i == m.rows()) continue;
    if (i != r) m.row(i).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    m.row(r) *= inv;
    for (Index row = 0; row < m.rows(); ++row) {
      if (row == r || m(row, c) == 0) continue;
      const Scalar f = m(row, c);
      m.row(row) -= f * m.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Solves a square nonsingular system exactly. Throws on singular input.
template <typename Scalar>
Vector<Scalar> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  const Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw PreconditionError("solve: shape mismatch");
  Matrix<Scalar> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto pivots = reduce_rows(aug);
  if (static_cast<Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
    throw PreconditionError("solve: singular system");
  return aug.col(n);
}

/// Orthogonal projection of `v` onto the row space of `basis` (rows need not
/// be independent).
template <typename Scalar>
Vector<Scalar> project_onto_rows(const Matrix<Scalar>& basis, const Vector<Scalar>& v) {
  if (basis.rows() == 0) return Vector<Scalar>::Zero(v.size());
  Matrix<Scalar> echelon = basis;
  const auto pivots = reduce_rows(echelon);
  const Matrix<Scalar> b = echelon.topRows(static_cast<Index>(pivots.size()));
  const Matrix<Scalar> gram = b * b.transpose();
  const Vector<Scalar> coeffs = solve<Scalar>(gram, b * v);
  return b.transpose() * coeffs;
}

}  // namespace tukey
