// Exact Tukey halfspace depth.
//
// The depth of x is the smallest number of sample points in a closed
// halfspace whose boundary passes through x. It is reported in count form
// (kappa = n * depth); the closed-halfspace convention is used throughout,
// which matches the integer-valued n * D(x) of the median-search literature.
#pragma once

#include "tukey/geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tukey {

struct DepthValue {
  Index kappa = 0;
  Index n = 0;

  Rational lambda() const { return Rational(kappa, n); }
  friend bool operator==(const DepthValue&, const DepthValue&) = default;
};

/// A direction u; only signs of u . (y - x) matter, so scale is irrelevant.
struct Direction {
  VectorQ vector;
};

struct DepthOptions {
  /// Compute on clouds that fail the general-position check instead of
  /// throwing. Results are still exact but flagged degenerate.
  bool force = false;
  /// The caller has already certified general position.
  bool skip_general_position_check = false;
};

struct DepthResult {
  DepthValue depth;
  /// A direction u attaining the minimum: exactly depth.kappa sample points
  /// satisfy u . X <= u . x.
  Direction witness;
  bool degenerate = false;
};

/// Reusable depth evaluator for one cloud. The general-position check runs
/// once at construction.
class DepthCalculator {
 public:
  explicit DepthCalculator(PointCloud cloud, DepthOptions options = {});

  DepthResult depth(const VectorQ& x) const;

  const PointCloud& cloud() const { return cloud_; }
  bool degenerate() const { return degenerate_; }

 private:
  PointCloud cloud_;
  bool degenerate_ = false;
};

DepthResult tukey_depth(const VectorQ& x, const PointCloud& cloud, DepthOptions options = {});

/// Rotates the hyperplane {y : u . y = u . z} about z so that every sample in
/// `on_indices` moves strictly to the side u . y > u . z while every other
/// sample keeps its side. Uses u~ = u - eps * v'', where v'' is the component
/// of z - X_{j1} orthogonal to the span of the on-point differences and
///   eps = 1/2 min_l |u . (z - X_l)| / |v'' . (z - X_l)|   (l off the plane),
/// a ratio with zero denominator counting as +infinity.
///
/// Throws PreconditionError when u is not normal to a hyperplane through z and
/// the listed points, when another sample lies on that hyperplane, or when
/// v'' vanishes (z in the affine span of the on-points).
Direction perturb_direction(const Direction& u, const VectorQ& z, std::span<const Index> on_indices,
                            const PointCloud& cloud);

struct SampleDepth {
  Index index = 0;
  DepthValue depth;
};

struct SampleDepths {
  std::vector<SampleDepth> depths;
  Index max_kappa = 0;
  std::vector<Index> argmax;
};

/// Depth of every sample point. On general-position clouds this is one sweep
/// over the hyperplanes through p sample points; otherwise each point goes
/// through DepthCalculator.
SampleDepths depth_all_samples(const PointCloud& cloud, DepthOptions options = {});

/// True iff every closed halfspace with theta on its boundary holds at least
/// half of the sample, i.e. 2 * kappa(theta) >= n.
bool halfspace_symmetric(const PointCloud& cloud, const VectorQ& theta, DepthOptions options = {});

/// #{i : u . X_i <= u . x}
Index closed_count(const PointCloud& cloud, const VectorQ& u, const VectorQ& x);

/// Largest number of the given vectors that an open halfspace through the
/// origin of R^d contains, with a direction w attaining it (w . v > 0 for
/// exactly that many v). Exact for any input, degenerate or not.
struct OpenHalfspace {
  Index count = 0;
  VectorQ direction;
};
OpenHalfspace max_open_halfspace(std::vector<VectorZ> vectors, Index d);

}  // namespace tukey
