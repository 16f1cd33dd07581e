// Slow reference implementations for differential testing. Nothing here
// calls into the depth or region engines (except median_oracle_grid for
// clouds too large for the exhaustive oracle, which it reports).
#pragma once

#include "tukey/geometry.hpp"

#include <cstdint>
#include <vector>

namespace tukey {

struct GridSpec {
  VectorQ lo;
  VectorQ hi;
  Index resolution = 2;   // points per axis, >= 2
  Index directions = 1;   // >= 1
  std::uint64_t seed = 0;
};

/// min over sampled directions u of #{i : u . X_i <= u . x}. The directions
/// come from a Halton sequence started at `seed`; each is converted exactly
/// from double. An upper bound on kappa.
Index depth_oracle_directions(const VectorQ& x, const PointCloud& cloud, const GridSpec& spec);
Index depth_oracle_directions(const VectorQ& x, const PointCloud& cloud, const std::vector<VectorQ>& directions);

/// Exact kappa by enumerating every cell of the arrangement of hyperplanes
/// through x: rays orthogonal to p - 1 vectors drawn from {X_i - x} and the
/// coordinate axes, and every open/closed split of the samples on each ray,
/// kept when a Fourier-Motzkin test shows it is realizable.
/// Limits: p <= 3, n <= 14 (PreconditionError otherwise).
Index depth_oracle_exhaustive(const VectorQ& x, const PointCloud& cloud);

struct GridMedian {
  Index max_kappa = 0;
  std::vector<VectorQ> argmax;  // grid points attaining max_kappa
  bool used_engine = false;     // true when n exceeded the exhaustive limit
};

/// Depth at every point of the regular grid spanned by spec.lo..spec.hi.
/// Requires p <= 3 and lo < hi in every coordinate.
GridMedian median_oracle_grid(const PointCloud& cloud, const GridSpec& spec);

}  // namespace tukey
