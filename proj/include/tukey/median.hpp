// Maximum depth, the median region M and its centroid T*, and checkers for
// the bounds that relate them.
#pragma once

#include "tukey/depth.hpp"
#include "tukey/region.hpp"

#include <string>
#include <vector>

namespace tukey {

/// Integer bounds on kappa* for n points in R^p.
struct DepthBounds {
  Index kappa_lo = 0;          // ceil(n / (p + 1))
  Index kappa_hi_dg92 = 0;     // ceil(n / 2)
  Index kappa_hi_thm1 = 0;     // floor((n - p + 2) / 2)
  Index kappa_hi_fulldim = 0;  // floor((n - p + 1) / 2), when dim(M) = p
};

/// Throws PreconditionError unless n > p >= 1, and std::logic_error if the
/// search interval [kappa_lo, kappa_hi_thm1] comes out empty.
DepthBounds depth_bounds(Index n, Index p);

enum class Strategy { dg92, thm1 };
enum class Search { descending, binary };

std::string to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

struct MaxDepth {
  Index kappa_star = 0;
  /// Number of depth regions built to locate kappa_star.
  Index regions_computed = 0;
};

struct MedianOptions {
  Strategy strategy = Strategy::thm1;
  Search search = Search::descending;
  bool force = false;
  /// Depth check of every vertex of M.
  bool certify_vertices = true;
  /// Step outside every active constraint at every vertex of M.
  bool boundary_sweep = true;
};

MaxDepth max_depth(const PointCloud& cloud, const MedianOptions& options = {});
MaxDepth max_depth(const RegionBuilder& builder, const MedianOptions& options = {});

struct MedianResult {
  Index kappa_star = 0;
  DepthRegion region;
  VectorQ median;
  bool is_singleton = false;
  std::vector<Index> deepest_sample_indices;
  /// Parallel to deepest_sample_indices.
  std::vector<bool> sample_is_vertex;
  Index regions_computed = 0;
  Strategy strategy = Strategy::thm1;
  DepthBounds bounds;
  bool degenerate = false;
};

MedianResult tukey_median(const PointCloud& cloud, const MedianOptions& options = {});

struct VerificationReport {
  std::string name;
  bool passed = true;
  /// False when the statement's hypothesis does not hold (vacuous pass).
  bool applicable = true;
  /// bound - kappa_star for the bound checks; 0 otherwise.
  Index margin = 0;
  std::vector<std::string> messages;
};

VerificationReport verify_theorem1(const MedianResult& result, Index n, Index p);
VerificationReport verify_theorem2(const MedianResult& result, const PointCloud& cloud);
VerificationReport verify_theorem3(const MedianResult& result, Index n, Index p);
/// Requires p >= 3. Checks 2 kappa* < n, and that no sample point and not T*
/// is a halfspace-symmetry center.
VerificationReport verify_prop1(const PointCloud& cloud, const MedianResult& result);
VerificationReport verify_prop1(const PointCloud& cloud);

}  // namespace tukey
