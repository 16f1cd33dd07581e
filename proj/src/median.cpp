#include "tukey/median.hpp"

#include <algorithm>

namespace tukey {
namespace {

Index ceil_div(Index a, Index b) { return (a + b - 1) / b; }

RegionOptions scan_options() {
  RegionOptions o;
  o.certify_vertices = false;
  o.boundary_sweep = false;
  o.infeasibility_certificate = false;
  return o;
}

VerificationReport skipped(std::string name) {
  VerificationReport r;
  r.name = std::move(name);
  r.applicable = false;
  r.messages.push_back("skipped: input is not in general position");
  return r;
}

}  // namespace

DepthBounds depth_bounds(Index n, Index p) {
  if (p < 1 || n <= p)
    throw PreconditionError("depth bounds need n > p >= 1 (got n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                            ")");
  DepthBounds b;
  b.kappa_lo = ceil_div(n, p + 1);
  b.kappa_hi_dg92 = ceil_div(n, 2);
  b.kappa_hi_thm1 = (n - p + 2) / 2;
  b.kappa_hi_fulldim = (n - p + 1) / 2;
  if (b.kappa_lo > b.kappa_hi_thm1)
    throw std::logic_error("empty depth search interval at n=" + std::to_string(n) + ", p=" + std::to_string(p));
  return b;
}

std::string to_string(Strategy s) { return s == Strategy::dg92 ? "dg92" : "thm1"; }

Strategy parse_strategy(std::string_view text) {
  if (text == "dg92") return Strategy::dg92;
  if (text == "thm1") return Strategy::thm1;
  throw PreconditionError("unknown strategy '" + std::string(text) + "' (expected dg92 or thm1)");
}

MaxDepth max_depth(const RegionBuilder& builder, const MedianOptions& options) {
  const PointCloud& cloud = builder.cloud();
  const DepthBounds b = depth_bounds(cloud.size(), cloud.dim());
  const Index hi = options.strategy == Strategy::dg92 ? b.kappa_hi_dg92 : b.kappa_hi_thm1;
  const RegionOptions ro = scan_options();

  MaxDepth out;
  const auto nonempty = [&](Index k) {
    ++out.regions_computed;
    return !builder.region(k, ro).empty();
  };

  if (options.search == Search::binary) {
    // Largest k in [lo, hi] with a nonempty region; emptiness is monotone in k.
    Index lo = b.kappa_lo;
    Index top = hi;
    if (!nonempty(lo)) {
      top = lo - 1;
      lo = 1;
    }
    while (lo < top) {
      const Index mid = lo + (top - lo + 1) / 2;
      if (nonempty(mid)) lo = mid;
      else top = mid - 1;
    }
    out.kappa_star = lo;
    return out;
  }

  // The lower bound guarantees a hit by kappa_lo; levels below it are only
  // reached if that guarantee fails, which is reported by the caller's checks.
  for (Index k = hi; k >= 1; --k)
    if (nonempty(k)) {
      out.kappa_star = k;
      return out;
    }
  throw std::logic_error("no nonempty depth region at any level >= 1");
}

MaxDepth max_depth(const PointCloud& cloud, const MedianOptions& options) {
  return max_depth(RegionBuilder(cloud, options.force), options);
}

MedianResult tukey_median(const PointCloud& cloud, const MedianOptions& options) {
  const RegionBuilder builder(cloud, options.force);
  const MaxDepth md = max_depth(builder, options);

  MedianResult r;
  r.kappa_star = md.kappa_star;
  r.strategy = options.strategy;
  r.bounds = depth_bounds(cloud.size(), cloud.dim());
  r.degenerate = builder.degenerate();

  RegionOptions ro;
  ro.force = options.force;
  ro.certify_vertices = options.certify_vertices;
  ro.boundary_sweep = options.boundary_sweep;
  r.region = builder.region(md.kappa_star, ro);
  r.regions_computed = md.regions_computed + 1;
  if (r.region.empty()) throw std::logic_error("median region is empty at kappa*");
  r.median = region_centroid(r.region);
  r.is_singleton = r.region.dim == 0;

  DepthOptions dopt;
  dopt.force = options.force;
  const SampleDepths sd = depth_all_samples(cloud, dopt);
  for (const auto& s : sd.depths) {
    if (s.depth.kappa != r.kappa_star) continue;
    r.deepest_sample_indices.push_back(s.index);
    const VectorQ x = cloud.point(s.index);
    r.sample_is_vertex.push_back(
        std::any_of(r.region.vertices.begin(), r.region.vertices.end(), [&](const VectorQ& v) { return v == x; }));
  }
  return r;
}

VerificationReport verify_theorem1(const MedianResult& result, Index n, Index p) {
  if (result.degenerate) return skipped("thm1");
  const DepthBounds b = depth_bounds(n, p);
  VerificationReport r;
  r.name = "thm1";
  r.margin = b.kappa_hi_thm1 - result.kappa_star;
  if (result.kappa_star > b.kappa_hi_thm1) {
    r.passed = false;
    r.messages.push_back("kappa* = " + std::to_string(result.kappa_star) + " exceeds floor((n-p+2)/2) = " +
                         std::to_string(b.kappa_hi_thm1));
  }
  if (result.region.dim == p) {
    r.margin = b.kappa_hi_fulldim - result.kappa_star;
    r.messages.push_back("dim(M) = p: checking floor((n-p+1)/2) = " + std::to_string(b.kappa_hi_fulldim));
    if (result.kappa_star > b.kappa_hi_fulldim) {
      r.passed = false;
      r.messages.push_back("kappa* = " + std::to_string(result.kappa_star) + " exceeds the full-dimensional bound");
    }
  }
  return r;
}

VerificationReport verify_theorem2(const MedianResult& result, const PointCloud& cloud) {
  if (result.degenerate) return skipped("thm2");
  VerificationReport r;
  r.name = "thm2";
  r.applicable = !result.deepest_sample_indices.empty();
  if (!r.applicable) r.messages.push_back("no sample point attains kappa*");
  for (std::size_t i = 0; i < result.deepest_sample_indices.size(); ++i) {
    const Index s = result.deepest_sample_indices[i];
    const VectorQ x = cloud.point(s);
    const bool vertex = std::any_of(result.region.vertices.begin(), result.region.vertices.end(),
                                    [&](const VectorQ& v) { return v == x; });
    const bool interior = std::all_of(result.region.halfspaces.begin(), result.region.halfspaces.end(),
                                      [&](const Halfspace& h) { return h.slack(x) > 0; });
    if (!vertex || interior) {
      r.passed = false;
      r.messages.push_back("sample " + std::to_string(s) + (interior ? " is interior to M" : " is not a vertex of M"));
    }
  }
  return r;
}

VerificationReport verify_theorem3(const MedianResult& result, Index n, Index p) {
  if (result.degenerate) return skipped("thm3");
  const DepthBounds b = depth_bounds(n, p);
  VerificationReport r;
  r.name = "thm3";
  r.margin = b.kappa_hi_thm1 - result.kappa_star;
  r.applicable = result.kappa_star == b.kappa_hi_thm1;
  if (!r.applicable) {
    r.messages.push_back("not applicable: kappa* below floor((n-p+2)/2)");
    return r;
  }
  if (!result.is_singleton) {
    r.passed = false;
    r.messages.push_back("kappa* attains the bound but dim(M) = " + std::to_string(result.region.dim));
    if ((n - p) % 2 == 1)
      r.messages.push_back("n - p is odd, so this bound equals floor((n-p+1)/2), which a full-dimensional M may attain");
  }
  return r;
}

VerificationReport verify_prop1(const PointCloud& cloud, const MedianResult& result) {
  if (cloud.dim() < 3) throw PreconditionError("the halfspace-symmetry check is stated for p >= 3");
  if (result.degenerate) return skipped("prop1");
  const Index n = cloud.size();
  VerificationReport r;
  r.name = "prop1";
  r.margin = depth_bounds(n, cloud.dim()).kappa_hi_dg92 - result.kappa_star;
  if (2 * result.kappa_star >= n) {
    r.passed = false;
    r.messages.push_back("kappa* = " + std::to_string(result.kappa_star) + " is at least n/2");
  }
  const SampleDepths sd = depth_all_samples(cloud);
  for (const auto& s : sd.depths)
    if (2 * s.depth.kappa >= n) {
      r.passed = false;
      r.messages.push_back("sample " + std::to_string(s.index) + " is a halfspace-symmetry center");
    }
  if (halfspace_symmetric(cloud, result.median)) {
    r.passed = false;
    r.messages.push_back("T* is a halfspace-symmetry center");
  }
  return r;
}

VerificationReport verify_prop1(const PointCloud& cloud) {
  if (cloud.dim() < 3) throw PreconditionError("the halfspace-symmetry check is stated for p >= 3");
  return verify_prop1(cloud, tukey_median(cloud));
}

}  // namespace tukey
