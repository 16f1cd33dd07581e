#include "tukey/depth.hpp"

#include "tukey/parallel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace tukey {
namespace {

MatrixZ rows_of(const std::vector<VectorZ>& vs, std::span<const Index> pick, Index d) {
  MatrixZ m(static_cast<Index>(pick.size()), d);
  for (Index i = 0; i < m.rows(); ++i) m.row(i) = vs[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].transpose();
  return m;
}

Integer dot(const VectorZ& a, const VectorZ& b) {
  Integer s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const VectorQ& a, const VectorZ& b) {
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

VectorZ drop_coordinate(const VectorZ& v, Index k) {
  VectorZ out(v.size() - 1);
  for (Index i = 0, j = 0; i < v.size(); ++i)
    if (i != k) out[j++] = v[i];
  return out;
}

VectorQ insert_zero(const VectorQ& w, Index k) {
  VectorQ out(w.size() + 1);
  for (Index i = 0, j = 0; i < out.size(); ++i) out[i] = (i == k) ? Rational(0) : w[j++];
  return out;
}

Index first_nonzero(const VectorZ& v) {
  Index k = 0;
  while (k < v.size() && v[k] == 0) ++k;
  return k;
}

// u + delta * w with delta small enough that every v off u's hyperplane keeps
// its strict sign: delta = 1/2 min |u . v| / |w . v| over v with both nonzero.
VectorQ perturb_towards(const VectorQ& u, const VectorQ& w, const std::vector<VectorZ>& vs) {
  std::optional<Rational> ratio;
  for (const auto& v : vs) {
    const Rational a = dot(u, v);
    const Rational b = dot(w, v);
    if (a == 0 || b == 0) continue;
    const Rational r = abs(a) / abs(b);
    if (!ratio || r < *ratio) ratio = r;
  }
  const Rational delta = ratio ? Rational(*ratio / 2) : Rational(1);
  return u + delta * w;
}

// Solves w . v_i = 1 for linearly independent v_i by w = V^T (V V^T)^{-1} 1.
VectorQ all_positive_direction(const std::vector<VectorZ>& vs, Index d) {
  MatrixQ v(static_cast<Index>(vs.size()), d);
  for (Index i = 0; i < v.rows(); ++i)
    for (Index j = 0; j < d; ++j) v(i, j) = Rational(vs[static_cast<std::size_t>(i)][j]);
  const MatrixQ gram = v * v.transpose();
  const VectorQ c = solve<Rational>(gram, VectorQ::Constant(v.rows(), Rational(1)));
  return v.transpose() * c;
}

struct RayCandidate {
  std::vector<std::size_t> zero_set;  // vectors orthogonal to the ray
  Index positive = 0;
  Index negative = 0;
};

RayCandidate classify(const VectorZ& ray, const std::vector<VectorZ>& vs) {
  RayCandidate c;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const int s = sign(dot(ray, vs[i]));
    if (s > 0) ++c.positive;
    else if (s < 0) ++c.negative;
    else c.zero_set.push_back(i);
  }
  return c;
}

std::vector<VectorZ> project_zero_set(const std::vector<VectorZ>& vs, const std::vector<std::size_t>& zero_set, Index k) {
  std::vector<VectorZ> out;
  out.reserve(zero_set.size());
  for (const auto i : zero_set) out.push_back(drop_coordinate(vs[i], k));
  return out;
}

}  // namespace

OpenHalfspace max_open_halfspace(std::vector<VectorZ> vs, Index d) {
  std::erase_if(vs, [](const VectorZ& v) { return is_zero(v); });
  if (vs.empty()) {
    VectorQ e = VectorQ::Zero(d);
    if (d > 0) e[0] = 1;
    return {0, e};
  }
  const auto m = static_cast<Index>(vs.size());

  if (d == 1) {
    Index pos = 0;
    for (const auto& v : vs) pos += v[0] > 0;
    VectorQ dir(1);
    dir[0] = (2 * pos >= m) ? 1 : -1;
    return {std::max(pos, m - pos), dir};
  }

  const auto [r, pivots] = rank_and_pivots<Integer>(stack_rows(vs, d));
  if (r < d) {
    // Only the component of w in span(vs) matters; pivot coordinates give an
    // isomorphism of that span onto R^r.
    std::vector<VectorZ> projected;
    projected.reserve(vs.size());
    for (const auto& v : vs) {
      VectorZ q(r);
      for (Index j = 0; j < r; ++j) q[j] = v[pivots[static_cast<std::size_t>(j)]];
      projected.push_back(std::move(q));
    }
    const OpenHalfspace sub = max_open_halfspace(std::move(projected), r);
    VectorQ w = VectorQ::Zero(d);
    for (Index j = 0; j < r; ++j) w[pivots[static_cast<std::size_t>(j)]] = sub.direction[j];
    return {sub.count, w};
  }
  if (m == d) return {d, all_positive_direction(vs, d)};

  // Every full-dimensional cell of the central arrangement {v^perp} has an
  // extreme ray orthogonal to d-1 independent vectors; the best cell around a
  // ray is its strict side count plus the best split of the vectors on it.
  Index best = -1;
  VectorZ best_ray;
  int best_sign = 1;
  RayCandidate best_candidate;
  for_each_subset(m, d - 1, [&](std::span<const Index> s) {
    const VectorZ ray = cross<Integer>(rows_of(vs, s, d));
    if (is_zero(ray)) return true;
    RayCandidate c = classify(ray, vs);
    Index sub = static_cast<Index>(c.zero_set.size());
    if (sub > d - 1)
      sub = max_open_halfspace(project_zero_set(vs, c.zero_set, first_nonzero(ray)), d - 1).count;
    for (const int sg : {1, -1}) {
      const Index value = (sg > 0 ? c.positive : c.negative) + sub;
      if (value > best) {
        best = value;
        best_ray = ray;
        best_sign = sg;
        best_candidate = c;
      }
    }
    return best < m;
  });

  const Index k = first_nonzero(best_ray);
  const OpenHalfspace sub = max_open_halfspace(project_zero_set(vs, best_candidate.zero_set, k), d - 1);
  const VectorQ u = to_rational(best_ray) * Rational(best_sign);
  return {best, perturb_towards(u, insert_zero(sub.direction, k), vs)};
}

DepthCalculator::DepthCalculator(PointCloud cloud, DepthOptions options) : cloud_(std::move(cloud)) {
  if (!options.skip_general_position_check) {
    if (const auto witness = check_general_position(cloud_)) {
      if (!options.force) {
        std::string msg = "point cloud is not in general position: samples {";
        for (std::size_t i = 0; i < witness->size(); ++i) msg += (i ? "," : "") + std::to_string((*witness)[i]);
        throw GeneralPositionError(msg + "} are affinely dependent");
      }
      degenerate_ = true;
    }
  }
}

DepthResult DepthCalculator::depth(const VectorQ& x) const {
  const Index n = cloud_.size();
  const Index p = cloud_.dim();
  if (x.size() != p) throw PreconditionError("query point has the wrong dimension");

  // Directions to the samples, each rescaled by a positive factor to an
  // integer vector. Samples coinciding with x lie in every closed halfspace.
  std::vector<VectorZ> rel;
  std::vector<Index> rel_index;
  Index coincident = 0;
  for (Index i = 0; i < n; ++i) {
    const VectorQ y = cloud_.point(i) - x;
    if (is_zero(y)) {
      ++coincident;
      continue;
    }
    rel.push_back(clear_denominators(y));
    rel_index.push_back(i);
  }

  DepthResult result;
  result.degenerate = degenerate_;
  const auto m = static_cast<Index>(rel.size());

  if (m == 0 || rank<Integer>(stack_rows(rel, p)) < p) {
    const OpenHalfspace open = max_open_halfspace(rel, p);
    result.depth = {n - open.count, n};
    result.witness = {open.direction};
  } else {
    Index best = -1;
    VectorZ best_ray;
    int best_sign = 1;
    RayCandidate best_candidate;
    VectorQ best_canonical;
    for_each_subset(m, p - 1, [&](std::span<const Index> s) {
      const VectorZ ray = cross<Integer>(rows_of(rel, s, p));
      if (is_zero(ray)) return true;
      RayCandidate c = classify(ray, rel);
      Index sub = static_cast<Index>(c.zero_set.size());
      if (sub > p - 1)
        sub = max_open_halfspace(project_zero_set(rel, c.zero_set, first_nonzero(ray)), p - 1).count;
      for (const int sg : {1, -1}) {
        const Index value = (sg > 0 ? c.positive : c.negative) + sub;
        if (value < best) continue;
        // canonical normal: first nonzero coordinate scaled to +-1
        VectorQ canonical = to_rational(ray) / Rational(abs(ray[first_nonzero(ray)]));
        if (sg < 0) canonical = -canonical;
        if (value > best || lex_compare(canonical, best_canonical) < 0) {
          best = value;
          best_ray = ray;
          best_sign = sg;
          best_candidate = c;
          best_canonical = std::move(canonical);
        }
      }
      return true;
    });

    result.depth = {n - best, n};
    const VectorQ u = to_rational(best_ray) * Rational(best_sign);
    const auto& zero_set = best_candidate.zero_set;
    if (static_cast<Index>(zero_set.size()) == p - 1) {
      // The on-hyperplane samples are independent directions from x: rotate
      // the hyperplane about x to push all of them to the open side.
      std::vector<Index> on;
      for (const auto i : zero_set) on.push_back(rel_index[i]);
      result.witness = perturb_direction({u}, x, on, cloud_);
    } else {
      const Index k = first_nonzero(best_ray);
      const OpenHalfspace sub = max_open_halfspace(project_zero_set(rel, zero_set, k), p - 1);
      result.witness = {perturb_towards(u, insert_zero(sub.direction, k), rel)};
    }
  }

  if (closed_count(cloud_, result.witness.vector, x) != result.depth.kappa)
    throw std::logic_error("depth witness does not realize the computed depth");
  return result;
}

DepthResult tukey_depth(const VectorQ& x, const PointCloud& cloud, DepthOptions options) {
  return DepthCalculator(cloud, options).depth(x);
}

Direction perturb_direction(const Direction& u, const VectorQ& z, std::span<const Index> on_indices,
                            const PointCloud& cloud) {
  const Index p = cloud.dim();
  const VectorQ& dir = u.vector;
  if (dir.size() != p || z.size() != p) throw PreconditionError("perturb_direction: dimension mismatch");
  if (is_zero(dir)) throw PreconditionError("perturb_direction: zero direction");
  if (on_indices.empty()) return u;

  std::vector<bool> on(static_cast<std::size_t>(cloud.size()), false);
  for (const Index j : on_indices) {
    if (j < 0 || j >= cloud.size()) throw PreconditionError("perturb_direction: sample index out of range");
    if (dir.dot(z - cloud.point(j)) != 0)
      throw PreconditionError("perturb_direction: sample " + std::to_string(j) + " is not on the hyperplane through z");
    on[static_cast<std::size_t>(j)] = true;
  }
  for (Index i = 0; i < cloud.size(); ++i) {
    if (on[static_cast<std::size_t>(i)]) continue;
    const VectorQ diff = z - cloud.point(i);
    if (!is_zero(diff) && dir.dot(diff) == 0)
      throw PreconditionError("perturb_direction: sample " + std::to_string(i) +
                              " lies on the hyperplane but is not listed");
  }

  const VectorQ base = cloud.point(on_indices[0]);
  MatrixQ span(static_cast<Index>(on_indices.size()) - 1, p);
  for (Index k = 1; k < static_cast<Index>(on_indices.size()); ++k)
    span.row(k - 1) = (cloud.point(on_indices[static_cast<std::size_t>(k)]) - base).transpose();
  const VectorQ v = z - base;
  const VectorQ residual = v - project_onto_rows<Rational>(span, v);
  if (is_zero(residual))
    throw PreconditionError("perturb_direction: z lies in the affine span of the on-hyperplane samples");

  std::optional<Rational> ratio;
  for (Index l = 0; l < cloud.size(); ++l) {
    if (on[static_cast<std::size_t>(l)]) continue;
    const VectorQ diff = z - cloud.point(l);
    const Rational den = abs(residual.dot(diff));
    if (den == 0) continue;
    const Rational r = abs(dir.dot(diff)) / den;
    if (!ratio || r < *ratio) ratio = r;
  }
  const Rational eps = ratio ? Rational(*ratio / 2) : Rational(1);
  const VectorQ rotated = dir - eps * residual;

  for (Index l = 0; l < cloud.size(); ++l) {
    const VectorQ diff = z - cloud.point(l);
    if (on[static_cast<std::size_t>(l)]) {
      if (rotated.dot(diff) >= 0) throw std::logic_error("perturb_direction: on-point was not removed");
    } else if (sign(rotated.dot(diff)) != sign(dir.dot(diff))) {
      throw std::logic_error("perturb_direction: off-point changed side");
    }
  }
  return {rotated};
}

SampleDepths depth_all_samples(const PointCloud& cloud, DepthOptions options) {
  const Index n = cloud.size();
  const Index p = cloud.dim();
  std::vector<Index> kappa(static_cast<std::size_t>(n), std::numeric_limits<Index>::max());

  bool degenerate = false;
  if (!options.skip_general_position_check) {
    if (const auto witness = check_general_position(cloud)) {
      if (!options.force) throw GeneralPositionError("point cloud is not in general position");
      degenerate = true;
    }
  }

  if (degenerate) {
    DepthOptions inner = options;
    inner.skip_general_position_check = true;
    const DepthCalculator calc(cloud, inner);
    for (Index i = 0; i < n; ++i) kappa[static_cast<std::size_t>(i)] = calc.depth(cloud.point(i)).depth.kappa;
  } else {
    // Under general position the only sample on a hyperplane through X_l and
    // p-1 others that cannot be rotated off is X_l itself, so
    // kappa(X_l) = 1 + min over such hyperplanes of the smaller open side.
    const auto pts = cloud.scaled_points();
    for_each_subset(n, p, [&](std::span<const Index> s) {
      MatrixZ diffs(p - 1, p);
      for (Index k = 1; k < p; ++k)
        diffs.row(k - 1) = (pts[static_cast<std::size_t>(s[static_cast<std::size_t>(k)])] - pts[static_cast<std::size_t>(s[0])]).transpose();
      const VectorZ normal = cross<Integer>(diffs);
      const Integer offset = dot(normal, pts[static_cast<std::size_t>(s[0])]);
      Index below = 0;
      Index above = 0;
      for (const auto& x : pts) {
        const int sg = sign(Integer(dot(normal, x) - offset));
        below += sg < 0;
        above += sg > 0;
      }
      const Index candidate = 1 + std::min(below, above);
      for (const Index i : s) {
        auto& k = kappa[static_cast<std::size_t>(i)];
        k = std::min(k, candidate);
      }
      return true;
    });
  }

  SampleDepths out;
  for (Index i = 0; i < n; ++i) {
    out.depths.push_back({i, {kappa[static_cast<std::size_t>(i)], n}});
    out.max_kappa = std::max(out.max_kappa, kappa[static_cast<std::size_t>(i)]);
  }
  for (const auto& d : out.depths)
    if (d.depth.kappa == out.max_kappa) out.argmax.push_back(d.index);
  return out;
}

bool halfspace_symmetric(const PointCloud& cloud, const VectorQ& theta, DepthOptions options) {
  const DepthCalculator calc(cloud, options);
  if (theta.size() != cloud.dim()) throw PreconditionError("query point has the wrong dimension");
  const Index n = cloud.size();
  const auto below_half = [&](const VectorQ& u) { return 2 * closed_count(cloud, u, theta) < n; };

  // One direction with a light closed side decides the question. Centroids
  // carry huge denominators, so try cheap directions before the exact depth:
  // the witness at a rounded copy of theta, then the sample hyperplane normals.
  VectorQ rounded(theta.size());
  const Integer grid = Integer(1) << 32;
  for (Index i = 0; i < theta.size(); ++i) {
    Integer num = boost::multiprecision::numerator(theta[i]) * grid;
    rounded[i] = Rational(Integer(num / boost::multiprecision::denominator(theta[i])), grid);
  }
  if (below_half(calc.depth(rounded).witness.vector)) return false;
  bool found = false;
  if (!calc.degenerate()) {
    for_each_subset(n, cloud.dim(), [&](std::span<const Index> s) {
      const VectorQ u = hyperplane_through(cloud, s).normal;
      found = below_half(u) || below_half(VectorQ(-u));
      return !found;
    });
  }
  if (found) return false;
  return 2 * calc.depth(theta).depth.kappa >= n;
}

Index closed_count(const PointCloud& cloud, const VectorQ& u, const VectorQ& x) {
  const Rational level = u.dot(x);
  Index count = 0;
  for (Index i = 0; i < cloud.size(); ++i) count += u.dot(cloud.point(i)) <= level;
  return count;
}

}  // namespace tukey
