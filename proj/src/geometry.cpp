#include "tukey/geometry.hpp"

#include <string>

namespace tukey {

PointCloud::PointCloud(MatrixQ points) : points_(std::move(points)) {
  if (points_.rows() < 1) throw PreconditionError("point cloud dimension must be at least 1");
  if (points_.cols() <= points_.rows())
    throw PreconditionError("point cloud needs n > p (got n = " + std::to_string(points_.cols()) +
                            ", p = " + std::to_string(points_.rows()) + ")");
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw PreconditionError("empty point cloud");
  const auto p = static_cast<Index>(rows.front().size());
  MatrixQ m(p, static_cast<Index>(rows.size()));
  for (Index i = 0; i < m.cols(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.size()) != p)
      throw PreconditionError("point " + std::to_string(i) + " has dimension " +
                              std::to_string(row.size()) + ", expected " + std::to_string(p));
    for (Index j = 0; j < p; ++j) m(j, i) = row[static_cast<std::size_t>(j)];
  }
  return PointCloud(std::move(m));
}

Integer PointCloud::common_denominator() const {
  Integer scale = 1;
  for (Index j = 0; j < points_.cols(); ++j)
    for (Index i = 0; i < points_.rows(); ++i) scale = lcm(scale, denominator(points_(i, j)));
  return scale;
}

std::vector<VectorZ> PointCloud::scaled_points() const {
  const Integer scale = common_denominator();
  std::vector<VectorZ> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Index j = 0; j < size(); ++j) {
    VectorZ v(dim());
    for (Index i = 0; i < dim(); ++i)
      v[i] = numerator(points_(i, j)) * (scale / denominator(points_(i, j)));
    out.push_back(std::move(v));
  }
  return out;
}

Hyperplane hyperplane_through(const PointCloud& cloud, std::span<const Index> indices) {
  const Index p = cloud.dim();
  if (static_cast<Index>(indices.size()) != p)
    throw PreconditionError("hyperplane_through needs exactly p sample indices");
  for (const Index i : indices)
    if (i < 0 || i >= cloud.size()) throw PreconditionError("sample index out of range");

  const VectorQ base = cloud.point(indices[0]);
  MatrixQ diffs(p - 1, p);
  for (Index k = 1; k < p; ++k) diffs.row(k - 1) = (cloud.point(indices[static_cast<std::size_t>(k)]) - base).transpose();
  VectorQ normal = cross(diffs);
  if (is_zero(normal)) throw PreconditionError("hyperplane_through: sample points are affinely dependent");

  Index first = 0;
  while (normal[first] == 0) ++first;
  if (normal[first] < 0) normal = -normal;

  Hyperplane h{normal, normal.dot(base), {indices.begin(), indices.end()}};
  return h;
}

std::optional<std::vector<Index>> check_general_position(const PointCloud& cloud) {
  const Index n = cloud.size();
  const Index p = cloud.dim();
  const auto pts = cloud.scaled_points();
  std::optional<std::vector<Index>> witness;
  MatrixZ m(p, p);
  for_each_subset(n, p + 1, [&](std::span<const Index> s) {
    for (Index i = 0; i < p; ++i) m.row(i) = (pts[static_cast<std::size_t>(s[static_cast<std::size_t>(i + 1)])] - pts[static_cast<std::size_t>(s[0])]).transpose();
    if (determinant(m) == 0) {
      witness.emplace(s.begin(), s.end());
      return false;
    }
    return true;
  });
  return witness;
}

SideCounts side_counts(const PointCloud& cloud, const Hyperplane& h) {
  if (h.normal.size() != cloud.dim()) throw PreconditionError("side_counts: dimension mismatch");
  SideCounts c;
  for (Index i = 0; i < cloud.size(); ++i) {
    switch (h.side(cloud.point(i))) {
      case -1: ++c.below; break;
      case 0: ++c.on; break;
      default: ++c.above; break;
    }
  }
  return c;
}

PointCloud affine_transform(const PointCloud& cloud, const MatrixQ& a, const VectorQ& b) {
  const Index p = cloud.dim();
  if (a.rows() != p || a.cols() != p || b.size() != p)
    throw PreconditionError("affine_transform: dimension mismatch");
  if (determinant(a) == 0) throw PreconditionError("affine_transform: singular matrix");
  MatrixQ out = a * cloud.points();
  out.colwise() += b;
  return PointCloud(std::move(out));
}

Index binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Index r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace tukey
