#include "tukey/oracles.hpp"

#include "tukey/depth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace tukey {
namespace {

constexpr Index exhaustive_max_p = 3;
constexpr Index exhaustive_max_n = 14;

Rational dot_q(const VectorQ& a, const VectorQ& b) {
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Radical inverse of `index` in `base`.
double halton(std::uint64_t index, unsigned base) {
  double f = 1;
  double r = 0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

constexpr unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::vector<VectorQ> halton_directions(Index p, Index count, std::uint64_t seed) {
  std::vector<VectorQ> out;
  std::uint64_t index = seed + 1;
  while (static_cast<Index>(out.size()) < count) {
    VectorQ u(p);
    if (p == 1) {
      u[0] = halton(index, 2) < 0.5 ? -1 : 1;
    } else if (p == 2) {
      const double t = 2 * std::numbers::pi * halton(index, 2);
      u[0] = Rational(std::cos(t));
      u[1] = Rational(std::sin(t));
    } else {
      for (Index i = 0; i < p; ++i) u[i] = Rational(2 * halton(index, primes[i % 12]) - 1);
    }
    ++index;
    bool zero = true;
    for (Index i = 0; i < p; ++i) zero = zero && u[i] == 0;
    if (!zero) out.push_back(std::move(u));
  }
  return out;
}

// Null space of the rows of `m` (r x d) when it is one-dimensional, by
// Gauss-Jordan elimination.
std::optional<VectorQ> null_ray(MatrixQ m) {
  const Index rows = m.rows();
  const Index d = m.cols();
  std::vector<Index> pivot_col;
  Index row = 0;
  for (Index c = 0; c < d && row < rows; ++c) {
    Index sel = -1;
    for (Index r = row; r < rows; ++r)
      if (m(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    m.row(row).swap(m.row(sel));
    const Rational inv = 1 / m(row, c);
    m.row(row) *= inv;
    for (Index r = 0; r < rows; ++r)
      if (r != row && m(r, c) != 0) {
        const Rational f = m(r, c);
        m.row(r) -= f * m.row(row);
      }
    pivot_col.push_back(c);
    ++row;
  }
  if (static_cast<Index>(pivot_col.size()) != d - 1) return std::nullopt;
  Index free = 0;
  for (Index c = 0; c < d; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free = c;
  VectorQ ray = VectorQ::Zero(d);
  ray[free] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) ray[pivot_col[i]] = -m(static_cast<Index>(i), free);
  return ray;
}

// Is {w : a . w > 0 for every row a} nonempty? Fourier-Motzkin elimination;
// for homogeneous strict systems every step is exact.
bool strictly_feasible(std::vector<VectorQ> rows, Index d) {
  for (Index k = d - 1; k >= 0; --k) {
    std::vector<VectorQ> pos, neg, next;
    for (auto& a : rows) {
      if (a[k] > 0) pos.push_back(std::move(a));
      else if (a[k] < 0) neg.push_back(std::move(a));
      else next.push_back(std::move(a));
    }
    for (const auto& a : pos)
      for (const auto& b : neg) next.push_back(VectorQ((-b[k]) * a + a[k] * b));
    rows.clear();
    for (auto& a : next) {
      bool zero = true;
      for (Index i = 0; i < k; ++i) zero = zero && a[i] == 0;
      if (zero) return false;  // 0 > 0
      VectorQ t = a.head(k);
      rows.push_back(std::move(t));
    }
  }
  return rows.empty();
}

}  // namespace

Index depth_oracle_directions(const VectorQ& x, const PointCloud& cloud, const std::vector<VectorQ>& directions) {
  if (directions.empty()) throw PreconditionError("need at least one direction");
  Index best = cloud.size();
  for (const auto& u : directions) {
    if (u.size() != cloud.dim()) throw PreconditionError("direction has the wrong dimension");
    const Rational ux = dot_q(u, x);
    Index count = 0;
    for (Index i = 0; i < cloud.size(); ++i) count += dot_q(u, cloud.point(i)) <= ux;
    best = std::min(best, count);
  }
  return best;
}

Index depth_oracle_directions(const VectorQ& x, const PointCloud& cloud, const GridSpec& spec) {
  if (spec.directions < 1) throw PreconditionError("direction count must be at least 1");
  return depth_oracle_directions(x, cloud, halton_directions(cloud.dim(), spec.directions, spec.seed));
}

Index depth_oracle_exhaustive(const VectorQ& x, const PointCloud& cloud) {
  const Index n = cloud.size();
  const Index p = cloud.dim();
  if (p > exhaustive_max_p || n > exhaustive_max_n)
    throw PreconditionError("exhaustive depth oracle is limited to p <= 3 and n <= 14");
  if (x.size() != p) throw PreconditionError("query point has the wrong dimension");

  std::vector<VectorQ> ys;
  Index coincident = 0;
  for (Index i = 0; i < n; ++i) {
    VectorQ y = cloud.point(i) - x;
    bool zero = true;
    for (Index j = 0; j < p; ++j) zero = zero && y[j] == 0;
    if (zero) ++coincident;
    else ys.push_back(std::move(y));
  }
  const auto m = static_cast<Index>(ys.size());
  if (m == 0) return coincident;

  // Pool of vectors that may pin a ray: the samples and the axes.
  std::vector<VectorQ> pool = ys;
  for (Index i = 0; i < p; ++i) {
    VectorQ e = VectorQ::Zero(p);
    e[i] = 1;
    pool.push_back(std::move(e));
  }

  std::vector<VectorQ> rays;
  if (p == 1) {
    rays.push_back(VectorQ::Constant(1, Rational(1)));
  } else {
    const auto pool_size = static_cast<Index>(pool.size());
    for_each_subset(pool_size, p - 1, [&](std::span<const Index> s) {
      MatrixQ a(p - 1, p);
      for (Index i = 0; i < p - 1; ++i) a.row(i) = pool[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])].transpose();
      if (auto r = null_ray(a)) rays.push_back(std::move(*r));
      return true;
    });
  }

  Index best = m;
  for (const auto& base : rays)
    for (const int orient : {1, -1}) {
      const VectorQ r = base * Rational(orient);
      Index negative = 0;
      std::vector<std::size_t> zero;
      for (std::size_t i = 0; i < ys.size(); ++i) {
        const Rational v = dot_q(r, ys[i]);
        if (v < 0) ++negative;
        else if (v == 0) zero.push_back(i);
      }
      if (negative >= best) continue;
      // Every open/closed split of the vectors on the ray's hyperplane.
      const std::size_t z = zero.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << z); ++mask) {
        const auto closed = static_cast<Index>(z - static_cast<std::size_t>(std::popcount(mask)));
        if (negative + closed >= best) continue;
        std::vector<VectorQ> rows;
        for (std::size_t b = 0; b < z; ++b) {
          const VectorQ& y = ys[zero[b]];
          rows.push_back(((mask >> b) & 1U) ? y : VectorQ(-y));
        }
        if (strictly_feasible(std::move(rows), p)) best = negative + closed;
      }
    }
  return coincident + best;
}

GridMedian median_oracle_grid(const PointCloud& cloud, const GridSpec& spec) {
  const Index p = cloud.dim();
  if (p > 3) throw PreconditionError("grid median oracle is limited to p <= 3");
  if (spec.lo.size() != p || spec.hi.size() != p) throw PreconditionError("grid box has the wrong dimension");
  if (spec.resolution < 2) throw PreconditionError("grid resolution must be at least 2");
  for (Index i = 0; i < p; ++i)
    if (!(spec.lo[i] < spec.hi[i])) throw PreconditionError("grid box is empty");

  GridMedian out;
  out.used_engine = cloud.size() > exhaustive_max_n;
  std::optional<DepthCalculator> engine;
  if (out.used_engine) engine.emplace(cloud);

  std::vector<Index> idx(static_cast<std::size_t>(p), 0);
  out.max_kappa = -1;
  while (true) {
    VectorQ x(p);
    for (Index i = 0; i < p; ++i)
      x[i] = spec.lo[i] + (spec.hi[i] - spec.lo[i]) * Rational(idx[static_cast<std::size_t>(i)], spec.resolution - 1);
    const Index k = engine ? engine->depth(x).depth.kappa : depth_oracle_exhaustive(x, cloud);
    if (k > out.max_kappa) {
      out.max_kappa = k;
      out.argmax.clear();
    }
    if (k == out.max_kappa) out.argmax.push_back(std::move(x));

    Index i = 0;
    while (i < p && ++idx[static_cast<std::size_t>(i)] == spec.resolution) idx[static_cast<std::size_t>(i++)] = 0;
    if (i == p) break;
  }
  return out;
}

}  // namespace tukey
