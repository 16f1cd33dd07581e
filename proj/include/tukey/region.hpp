// Depth regions D_k = {x : kappa(x) >= k} as halfspace intersections.
//
// The H-representation keeps, for every hyperplane through p sample points,
// the closed side opposite to an open side holding at most k - 1 samples.
// Vertices are enumerated exactly by clipping a bounding box with those
// halfspaces one at a time, tracking the active constraints of each vertex.
#pragma once

#include "tukey/depth.hpp"
#include "tukey/geometry.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace tukey {

/// Which closed side of the boundary hyperplane belongs to the halfspace.
enum class Side { above, below };

struct Halfspace {
  Hyperplane boundary;
  Side side = Side::above;
  /// Samples strictly on the excluded side.
  Index cut_off = 0;

  /// Nonnegative iff x is in the closed halfspace.
  Rational slack(const VectorQ& x) const {
    const Rational v = boundary.evaluate(x);
    return side == Side::above ? v : Rational(-v);
  }
  bool contains(const VectorQ& x) const { return slack(x) >= 0; }
};

enum class HalfspaceFilter {
  at_most,  // open side holds <= k-1 samples
  exactly,  // open side holds exactly k-1 samples
};

enum class RegionStatus { bounded, empty, unbounded };

struct Box {
  VectorQ lo;
  VectorQ hi;
};

struct VertexEnumeration {
  RegionStatus status = RegionStatus::empty;
  std::vector<VectorQ> vertices;  // lexicographically sorted, distinct
  /// Per vertex: indices of the halfspaces tight there.
  std::vector<std::vector<Index>> active;
  /// For empty regions: y >= 0 with sum_j y_j a_j = 0 and sum_j y_j b_j > 0
  /// over the constraints a_j . x >= b_j.
  std::optional<VectorQ> infeasibility_certificate;
};

struct VertexOptions {
  /// Known bounding box of the region. Without one, boundedness and the box
  /// are derived by exact linear programs.
  std::optional<Box> bounds;
  bool infeasibility_certificate = true;
};

VertexEnumeration region_vertices(std::span<const Halfspace> halfspaces, const VertexOptions& options = {});

/// Affine dimension of the convex hull of `vertices`; -1 when empty.
Index region_dim(std::span<const VectorQ> vertices);

/// Centroid of conv(vertices) with respect to its own k-dimensional measure.
/// Exact: the polytope is mapped to a k-dimensional coordinate chart, where
/// every simplex of a fan triangulation has a rational volume.
VectorQ polytope_centroid(std::span<const VectorQ> vertices);

struct DepthRegion {
  Index level_kappa = 0;
  std::vector<Halfspace> halfspaces;
  std::vector<VectorQ> vertices;
  /// Per vertex: indices into `halfspaces` of the constraints tight there.
  std::vector<std::vector<Index>> active;
  Index dim = -1;
  RegionStatus status = RegionStatus::empty;
  std::optional<VectorQ> infeasibility_certificate;
  bool certified = false;
  bool degenerate = false;

  bool empty() const { return vertices.empty(); }
  bool contains(const VectorQ& x) const;
};

VectorQ region_centroid(const DepthRegion& region);

struct RegionOptions {
  bool force = false;
  /// Check every vertex has depth >= k.
  bool certify_vertices = true;
  /// Step just outside every active constraint at every vertex and check the
  /// depth falls below k.
  bool boundary_sweep = true;
  bool infeasibility_certificate = true;
  HalfspaceFilter filter = HalfspaceFilter::at_most;
};

/// Thrown when a computed region fails its depth certification.
class CertificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Hyperplanes through every p-subset of the sample with their side counts,
/// computed once and shared by all levels. Vertex enumerations are cached per
/// level, so asking for the same level twice costs one enumeration.
class RegionBuilder {
 public:
  explicit RegionBuilder(PointCloud cloud, bool force = false);

  std::vector<Halfspace> halfspaces(Index kappa, HalfspaceFilter filter = HalfspaceFilter::at_most) const;
  DepthRegion region(Index kappa, const RegionOptions& options = {}) const;

  const PointCloud& cloud() const { return cloud_; }
  bool degenerate() const { return degenerate_; }
  Index hyperplane_count() const { return static_cast<Index>(planes_.size()); }

 private:
  struct SampleHyperplane {
    std::vector<Index> indices;
    Hyperplane plane;
    Index below = 0;
    Index above = 0;
  };

  PointCloud cloud_;
  bool degenerate_ = false;
  std::vector<SampleHyperplane> planes_;
  Box bounds_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Index, int>, std::shared_ptr<const VertexEnumeration>> cache_;
};

std::vector<Halfspace> region_halfspaces(const PointCloud& cloud, Index kappa,
                                         HalfspaceFilter filter = HalfspaceFilter::at_most, bool force = false);

DepthRegion depth_region(const PointCloud& cloud, Index kappa, const RegionOptions& options = {});

}  // namespace tukey
