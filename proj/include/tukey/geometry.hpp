// Point clouds, hyperplanes through sample points, and the exact predicates
// everything else is built on.
#pragma once

#include "tukey/linalg.hpp"
#include "tukey/numeric.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tukey {

/// n points in R^p with exact coordinates, stored one point per column.
class PointCloud {
 public:
  PointCloud() = default;
  /// `points` is p x n. Requires n > p >= 1.
  explicit PointCloud(MatrixQ points);
  static PointCloud from_rows(const std::vector<std::vector<Rational>>& rows);

  Index size() const { return points_.cols(); }
  Index dim() const { return points_.rows(); }
  VectorQ point(Index i) const { return points_.col(i); }
  const MatrixQ& points() const { return points_; }

  /// Coordinates multiplied by the lcm of every denominator, one integer
  /// vector per point. A positive uniform scaling: all orientations, side
  /// counts and depths are unchanged.
  std::vector<VectorZ> scaled_points() const;
  /// The common denominator used by scaled_points().
  Integer common_denominator() const;

  friend bool operator==(const PointCloud& a, const PointCloud& b) { return a.points_ == b.points_; }

 private:
  MatrixQ points_;
};

/// {x : normal . x = offset}
struct Hyperplane {
  VectorQ normal;
  Rational offset;
  std::vector<Index> defining_indices;

  Rational evaluate(const VectorQ& x) const { return normal.dot(x) - offset; }
  int side(const VectorQ& x) const { return sign(evaluate(x)); }
};

struct SideCounts {
  Index below = 0;
  Index on = 0;
  Index above = 0;
};

/// Sign of det[x_1 - x_0, ..., x_p - x_0] for p+1 points in R^p.
template <typename Scalar>
int orientation(std::span<const Vector<Scalar>> points) {
  if (points.empty()) throw PreconditionError("orientation needs p+1 points");
  const Index p = points.front().size();
  if (static_cast<Index>(points.size()) != p + 1)
    throw PreconditionError("orientation needs exactly p+1 points in R^p");
  Matrix<Scalar> m(p, p);
  for (Index i = 0; i < p; ++i) {
    const auto& q = points[static_cast<std::size_t>(i + 1)];
    if (q.size() != p) throw PreconditionError("orientation: dimension mismatch");
    m.row(i) = (q - points.front()).transpose();
  }
  return sign(determinant(std::move(m)));
}

/// Hyperplane through the p sample points `indices`. The normal is the
/// generalized cross product of the difference vectors, so its magnitude does
/// not depend on index order; its first nonzero coordinate is made positive.
Hyperplane hyperplane_through(const PointCloud& cloud, std::span<const Index> indices);

/// nullopt when no p+1 sample points are affinely dependent; otherwise the
/// first violating (p+1)-subset in lexicographic order.
std::optional<std::vector<Index>> check_general_position(const PointCloud& cloud);

SideCounts side_counts(const PointCloud& cloud, const Hyperplane& h);

/// Maps X_i to A X_i + b. Throws on singular A.
PointCloud affine_transform(const PointCloud& cloud, const MatrixQ& a, const VectorQ& b);

/// Calls `visit(indices)` for every k-subset of {0..n-1} in lexicographic
/// order. Stops early when `visit` returns false.
template <typename Visit>
void for_each_subset(Index n, Index k, Visit&& visit) {
  if (k < 0 || k > n) return;
  std::vector<Index> idx(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!visit(std::span<const Index>(idx))) return;
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// n choose k as a plain count (saturating is not needed at desk scale).
Index binomial(Index n, Index k);

}  // namespace tukey
