#include "tukey/region.hpp"

#include "tukey/lp.hpp"
#include "tukey/parallel.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <string>

namespace tukey {
namespace {

// a . x >= b with integer data.
struct Constraint {
  VectorZ a;
  Integer b;
};

Constraint integer_constraint(const Halfspace& h) {
  const Rational flip = h.side == Side::above ? Rational(1) : Rational(-1);
  Integer scale = denominator(h.boundary.offset);
  for (Index i = 0; i < h.boundary.normal.size(); ++i) scale = lcm(scale, denominator(h.boundary.normal[i]));
  Constraint c{VectorZ(h.boundary.normal.size()), 0};
  for (Index i = 0; i < c.a.size(); ++i) {
    const Rational v = h.boundary.normal[i] * flip * Rational(scale);
    c.a[i] = numerator(v);
  }
  c.b = numerator(h.boundary.offset * flip * Rational(scale));
  Integer g = abs(c.b);
  for (Index i = 0; i < c.a.size(); ++i) g = gcd(g, c.a[i]);
  if (g > 1) {
    c.a /= g;
    c.b /= g;
  }
  return c;
}

// A point num / den with den > 0 and the ids of the constraints tight there.
struct ClipVertex {
  VectorZ num;
  Integer den;
  std::vector<Index> active;
};

void reduce(ClipVertex& v) {
  Integer g = v.den;
  for (Index i = 0; i < v.num.size(); ++i) g = gcd(g, v.num[i]);
  if (g > 1) {
    v.num /= g;
    v.den /= g;
  }
}

// Exact incremental halfspace intersection. Two vertices span an edge iff the
// constraints tight at both have rank d - 1; this holds with degeneracy as
// long as the active sets are complete, which clipping preserves.
class Clipper {
 public:
  Clipper(const VectorQ& lo, const VectorQ& hi) : d_(lo.size()) {
    // x_i >= lo_i and -x_i >= -hi_i, scaled to integers by a common denominator.
    Integer den = 1;
    for (Index i = 0; i < d_; ++i) den = lcm(den, lcm(denominator(lo[i]), denominator(hi[i])));
    const auto scaled = [&](const Rational& v) { return Integer(numerator(v) * (den / denominator(v))); };
    for (Index i = 0; i < d_; ++i) {
      VectorZ e = VectorZ::Zero(d_);
      e[i] = den;
      constraints_.push_back({e, scaled(lo[i])});
      constraints_.push_back({VectorZ(-e), Integer(-scaled(hi[i]))});
    }
    const std::size_t corners = std::size_t{1} << d_;
    for (std::size_t mask = 0; mask < corners; ++mask) {
      ClipVertex v{VectorZ(d_), den, {}};
      for (Index i = 0; i < d_; ++i) {
        const bool upper = (mask >> i) & 1U;
        v.num[i] = scaled(upper ? hi[i] : lo[i]);
        v.active.push_back(2 * i + (upper ? 1 : 0));
      }
      reduce(v);
      vertices_.push_back(std::move(v));
    }
  }

  Index box_constraints() const { return 2 * d_; }

  void clip(const Constraint& c) {
    const auto id = static_cast<Index>(constraints_.size());
    constraints_.push_back(c);
    if (vertices_.empty()) return;

    // Hot loop: raw GMP calls into reused storage avoid a temporary per
    // product.
    if (slack_.size() < vertices_.size()) slack_.resize(vertices_.size());
    auto& slack = slack_;
    bool any_out = false;
    bool any_in = false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      mpz_ptr s = slack[i].backend().data();
      mpz_mul(s, c.b.backend().data(), vertices_[i].den.backend().data());
      mpz_neg(s, s);
      for (Index k = 0; k < d_; ++k) mpz_addmul(s, c.a[k].backend().data(), vertices_[i].num[k].backend().data());
      const int sg = mpz_sgn(s);
      any_out |= sg < 0;
      any_in |= sg >= 0;
    }
    if (!any_out) {
      for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (slack[i] == 0) vertices_[i].active.push_back(id);
      return;
    }
    if (!any_in) {
      vertices_.clear();
      return;
    }

    std::vector<ClipVertex> next;
    std::vector<std::size_t> in;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (slack[i] > 0) in.push_back(i);
      else if (slack[i] < 0) out.push_back(i);
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (slack[i] < 0) continue;
      ClipVertex v = vertices_[i];
      if (slack[i] == 0) v.active.push_back(id);
      next.push_back(std::move(v));
    }
    std::vector<Index> common;
    for (const auto u : in) {
      for (const auto w : out) {
        const auto& au = vertices_[u].active;
        const auto& aw = vertices_[w].active;
        common.clear();
        std::set_intersection(au.begin(), au.end(), aw.begin(), aw.end(), std::back_inserter(common));
        if (static_cast<Index>(common.size()) < d_ - 1 || !spans_edge(common)) continue;
        const Integer& su = slack[u];
        const Integer& sw = slack[w];
        ClipVertex v{VectorZ(su * vertices_[w].num - sw * vertices_[u].num),
                     Integer(su * vertices_[w].den - sw * vertices_[u].den), common};
        v.active.push_back(id);
        reduce(v);
        next.push_back(std::move(v));
      }
    }
    vertices_ = std::move(next);
  }

  const std::vector<ClipVertex>& vertices() const { return vertices_; }

 private:
  bool spans_edge(const std::vector<Index>& ids) const {
    MatrixZ m(static_cast<Index>(ids.size()), d_);
    for (Index i = 0; i < m.rows(); ++i) m.row(i) = constraints_[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])].a.transpose();
    return rank<Integer>(m) == d_ - 1;
  }

  Index d_;
  std::vector<Integer> slack_;
  std::vector<Constraint> constraints_;
  std::vector<ClipVertex> vertices_;
};

// Farkas multipliers for {a_j . x >= b_j}: max b . y s.t. A^T y = 0, 1 . y = 1.
// Returns nullopt when the system is feasible.
std::optional<VectorQ> infeasibility_certificate(const std::vector<Constraint>& cs, Index d) {
  const auto m = static_cast<Index>(cs.size());
  MatrixQ a(d + 1, m);
  VectorQ cost(m);
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < d; ++i) a(i, j) = Rational(cs[static_cast<std::size_t>(j)].a[i]);
    a(d, j) = 1;
    cost[j] = Rational(-cs[static_cast<std::size_t>(j)].b);
  }
  VectorQ rhs = VectorQ::Zero(d + 1);
  rhs[d] = 1;
  const lp::Result r = lp::minimize(a, rhs, cost);
  if (r.status != lp::Status::optimal || r.objective >= 0) return std::nullopt;
  return r.solution;
}

// Deepest cuts first: they shrink the polytope fastest.
std::vector<std::size_t> clip_order(std::span<const Halfspace> halfspaces) {
  std::vector<std::size_t> order(halfspaces.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return halfspaces[a].cut_off > halfspaces[b].cut_off;
  });
  return order;
}

// Multipliers over a subset are a certificate for the whole system, so try
// doubling prefixes of `order` before the full LP.
std::optional<VectorQ> infeasibility_certificate(const std::vector<Constraint>& cs, Index d,
                                                 const std::vector<std::size_t>& order) {
  for (std::size_t size = 4 * static_cast<std::size_t>(d + 1); size < cs.size(); size *= 2) {
    std::vector<Constraint> head;
    for (std::size_t i = 0; i < size; ++i) head.push_back(cs[order[i]]);
    if (auto part = infeasibility_certificate(head, d)) {
      VectorQ y = VectorQ::Zero(static_cast<Index>(cs.size()));
      for (std::size_t i = 0; i < size; ++i) y[static_cast<Index>(order[i])] = (*part)[static_cast<Index>(i)];
      return y;
    }
  }
  return infeasibility_certificate(cs, d);
}

std::optional<VectorQ> infeasibility_certificate(std::span<const Halfspace> halfspaces) {
  std::vector<Constraint> cs;
  for (const auto& h : halfspaces) cs.push_back(integer_constraint(h));
  return infeasibility_certificate(cs, halfspaces.front().boundary.normal.size(), clip_order(halfspaces));
}

bool recession_free(const std::vector<Constraint>& cs, Index d) {
  // {x : A x >= 0} = {0} iff every +-e_i is a nonnegative combination of the a_j.
  const auto m = static_cast<Index>(cs.size());
  MatrixQ a(d, m);
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < d; ++i) a(i, j) = Rational(cs[static_cast<std::size_t>(j)].a[i]);
  for (Index i = 0; i < d; ++i)
    for (const int s : {1, -1}) {
      VectorQ e = VectorQ::Zero(d);
      e[i] = s;
      if (!lp::feasible(a, e)) return false;
    }
  return true;
}

Box lp_bounds(const std::vector<Constraint>& cs, Index d) {
  // max c . x over A x >= b equals min -b . y over -A^T y = c, y >= 0.
  const auto m = static_cast<Index>(cs.size());
  MatrixQ a(d, m);
  VectorQ cost(m);
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < d; ++i) a(i, j) = Rational(-cs[static_cast<std::size_t>(j)].a[i]);
    cost[j] = Rational(-cs[static_cast<std::size_t>(j)].b);
  }
  Box box{VectorQ(d), VectorQ(d)};
  for (Index i = 0; i < d; ++i) {
    VectorQ e = VectorQ::Zero(d);
    e[i] = 1;
    const lp::Result up = lp::minimize(a, e, cost);
    const lp::Result down = lp::minimize(a, VectorQ(-e), cost);
    if (up.status != lp::Status::optimal || down.status != lp::Status::optimal)
      throw std::logic_error("bounded region without finite coordinate bounds");
    box.hi[i] = up.objective;
    box.lo[i] = -down.objective;
  }
  return box;
}

}  // namespace

VertexEnumeration region_vertices(std::span<const Halfspace> halfspaces, const VertexOptions& options) {
  if (halfspaces.empty()) throw PreconditionError("region_vertices needs at least one halfspace");
  const Index d = halfspaces.front().boundary.normal.size();
  std::vector<Constraint> cs;
  cs.reserve(halfspaces.size());
  for (const auto& h : halfspaces) {
    if (h.boundary.normal.size() != d) throw PreconditionError("region_vertices: dimension mismatch");
    cs.push_back(integer_constraint(h));
  }

  const std::vector<std::size_t> order = clip_order(halfspaces);
  VertexEnumeration out;
  Box box;
  if (options.bounds) {
    box = *options.bounds;
  } else {
    if (auto cert = infeasibility_certificate(cs, d, order)) {
      out.status = RegionStatus::empty;
      out.infeasibility_certificate = std::move(cert);
      return out;
    }
    if (!recession_free(cs, d)) {
      out.status = RegionStatus::unbounded;
      return out;
    }
    box = lp_bounds(cs, d);
  }
  // Strictly enlarge so the box never supports the region itself.
  for (Index i = 0; i < d; ++i) {
    box.lo[i] -= 1;
    box.hi[i] += 1;
  }

  Clipper clipper(box.lo, box.hi);
  for (const auto j : order) {
    clipper.clip(cs[j]);
    if (clipper.vertices().empty()) break;
  }

  if (clipper.vertices().empty()) {
    out.status = RegionStatus::empty;
    if (options.infeasibility_certificate) out.infeasibility_certificate = infeasibility_certificate(cs, d, order);
    return out;
  }

  const Index box_ids = clipper.box_constraints();
  std::vector<std::pair<VectorQ, std::vector<Index>>> found;
  bool touches_box = false;
  for (const auto& v : clipper.vertices()) {
    VectorQ x(d);
    for (Index i = 0; i < d; ++i) x[i] = Rational(v.num[i], v.den);
    std::vector<Index> active;
    for (const Index id : v.active) {
      if (id < box_ids) touches_box = true;
      else active.push_back(static_cast<Index>(order[static_cast<std::size_t>(id - box_ids)]));
    }
    std::sort(active.begin(), active.end());
    found.emplace_back(std::move(x), std::move(active));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return lex_compare(a.first, b.first) < 0; });
  for (auto& [x, active] : found) {
    if (!out.vertices.empty() && out.vertices.back() == x) {
      auto& merged = out.active.back();
      merged.insert(merged.end(), active.begin(), active.end());
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      continue;
    }
    out.vertices.push_back(std::move(x));
    out.active.push_back(std::move(active));
  }
  out.status = touches_box ? RegionStatus::unbounded : RegionStatus::bounded;
  return out;
}

Index region_dim(std::span<const VectorQ> vertices) {
  if (vertices.empty()) return -1;
  const Index p = vertices.front().size();
  MatrixQ diffs(static_cast<Index>(vertices.size()) - 1, p);
  for (Index i = 1; i < static_cast<Index>(vertices.size()); ++i)
    diffs.row(i - 1) = (vertices[static_cast<std::size_t>(i)] - vertices.front()).transpose();
  return rank<Rational>(diffs);
}

namespace {

// Facets of a full-dimensional polytope in R^k, as sorted vertex-id lists.
std::vector<std::vector<Index>> facets_of(const std::vector<VectorQ>& pts, Index k) {
  const auto n = static_cast<Index>(pts.size());
  std::set<std::vector<Index>> facets;
  for_each_subset(n, k, [&](std::span<const Index> s) {
    MatrixQ diffs(k - 1, k);
    for (Index i = 1; i < k; ++i) diffs.row(i - 1) = (pts[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] - pts[static_cast<std::size_t>(s[0])]).transpose();
    const VectorQ normal = cross<Rational>(diffs);
    if (is_zero(normal)) return true;
    const Rational offset = normal.dot(pts[static_cast<std::size_t>(s[0])]);
    bool pos = false;
    bool neg = false;
    std::vector<Index> on;
    for (Index i = 0; i < n; ++i) {
      const int sg = sign(Rational(normal.dot(pts[static_cast<std::size_t>(i)]) - offset));
      pos |= sg > 0;
      neg |= sg < 0;
      if (sg == 0) on.push_back(i);
    }
    if (!(pos && neg)) facets.insert(std::move(on));
    return true;
  });
  return {facets.begin(), facets.end()};
}

// A chart point as num / den, den > 0.
struct Homogeneous {
  VectorZ num;
  Integer den;
};

// Affine rank of points = rank of their rows [num, den] minus one.
Index affine_rank(const std::vector<Homogeneous>& pts, const std::vector<Index>& ids) {
  const Index k = pts.front().num.size();
  MatrixZ m(static_cast<Index>(ids.size()), k + 1);
  for (Index i = 0; i < m.rows(); ++i) {
    const auto& h = pts[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])];
    m.row(i).head(k) = h.num.transpose();
    m(i, k) = h.den;
  }
  return rank<Integer>(m) - 1;
}

// Pairwise summation keeps the operands of each addition similar in size.
Rational tree_sum(std::vector<Rational> terms) {
  if (terms.empty()) return 0;
  while (terms.size() > 1) {
    std::vector<Rational> next;
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms.front();
}

// Pulling triangulation of a j-dimensional face: cone from its first vertex
// over the faces of dimension j - 1 not containing it. Collects k! times the
// volume of each simplex and that volume times the sum of its vertices.
struct Accumulator {
  const std::vector<Homogeneous>& pts;
  const std::vector<std::vector<Index>>& facets;
  Index k;
  std::vector<Index> apexes;
  std::vector<Rational> volumes;
  std::vector<std::vector<Rational>> moments;

  void run(const std::vector<Index>& face, Index j) {
    if (j == 0) {
      apexes.push_back(face.front());
      add_simplex();
      apexes.pop_back();
      return;
    }
    const Index apex = face.front();
    std::set<std::vector<Index>> subfaces;
    for (const auto& f : facets) {
      std::vector<Index> g;
      std::set_intersection(face.begin(), face.end(), f.begin(), f.end(), std::back_inserter(g));
      if (static_cast<Index>(g.size()) < j || std::binary_search(g.begin(), g.end(), apex)) continue;
      if (g.size() == face.size() || subfaces.count(g)) continue;
      if (affine_rank(pts, g) == j - 1) subfaces.insert(std::move(g));
    }
    apexes.push_back(apex);
    for (const auto& g : subfaces) run(g, j - 1);
    apexes.pop_back();
  }

  // det [num_i, den_i] = prod(den_i) * det [v_i - v_0].
  void add_simplex() {
    MatrixZ m(k + 1, k + 1);
    Integer den_product = 1;
    for (Index i = 0; i <= k; ++i) {
      const auto& h = pts[static_cast<std::size_t>(apexes[static_cast<std::size_t>(i)])];
      m.row(i).head(k) = h.num.transpose();
      m(i, k) = h.den;
      den_product *= h.den;
    }
    const Rational volume(abs(determinant<Integer>(std::move(m))), den_product);
    for (Index c = 0; c < k; ++c) {
      Rational sum = 0;
      for (Index i = 0; i <= k; ++i) {
        const auto& h = pts[static_cast<std::size_t>(apexes[static_cast<std::size_t>(i)])];
        sum += Rational(h.num[c], h.den);
      }
      moments[static_cast<std::size_t>(c)].push_back(volume * sum);
    }
    volumes.push_back(volume);
  }
};

}  // namespace

namespace {

// `facets` lists vertex ids per facet when known; otherwise they are found by
// brute force over k-subsets of the chart points.
VectorQ centroid_impl(std::span<const VectorQ> vertices, const std::vector<std::vector<Index>>* facets) {
  if (vertices.empty()) throw PreconditionError("centroid of an empty region");
  const VectorQ& origin = vertices.front();
  const Index p = origin.size();
  const Index k = region_dim(vertices);
  if (k == 0) return origin;

  MatrixQ diffs(static_cast<Index>(vertices.size()) - 1, p);
  for (Index i = 1; i < static_cast<Index>(vertices.size()); ++i)
    diffs.row(i - 1) = (vertices[static_cast<std::size_t>(i)] - origin).transpose();
  const auto pivots = reduce_rows(diffs);
  const MatrixQ basis = diffs.topRows(k);  // reduced echelon: identity on the pivot columns

  // Chart coordinates are the pivot entries of x - origin.
  std::vector<VectorQ> chart;
  for (const auto& v : vertices) {
    VectorQ c(k);
    for (Index i = 0; i < k; ++i) c[i] = v[pivots[static_cast<std::size_t>(i)]] - origin[pivots[static_cast<std::size_t>(i)]];
    chart.push_back(std::move(c));
  }

  VectorQ centroid_chart(k);
  if (k == 1) {
    Rational lo = chart.front()[0];
    Rational hi = lo;
    for (const auto& c : chart) {
      lo = std::min(lo, c[0]);
      hi = std::max(hi, c[0]);
    }
    centroid_chart[0] = (lo + hi) / 2;
  } else {
    const auto found = facets ? *facets : facets_of(chart, k);
    std::vector<Homogeneous> hom;
    for (const auto& c : chart) {
      Integer den = 1;
      for (Index i = 0; i < k; ++i) den = lcm(den, denominator(c[i]));
      VectorZ num(k);
      for (Index i = 0; i < k; ++i) num[i] = numerator(c[i]) * (den / denominator(c[i]));
      hom.push_back({std::move(num), std::move(den)});
    }
    Accumulator acc{hom, found, k, {}, {}, std::vector<std::vector<Rational>>(static_cast<std::size_t>(k))};
    std::vector<Index> all(chart.size());
    std::iota(all.begin(), all.end(), Index{0});
    acc.run(all, k);
    const Rational denom = tree_sum(std::move(acc.volumes)) * Rational(k + 1);
    for (Index i = 0; i < k; ++i) centroid_chart[i] = tree_sum(std::move(acc.moments[static_cast<std::size_t>(i)])) / denom;
  }
  return origin + basis.transpose() * centroid_chart;
}

}  // namespace

VectorQ polytope_centroid(std::span<const VectorQ> vertices) { return centroid_impl(vertices, nullptr); }

bool DepthRegion::contains(const VectorQ& x) const {
  return std::all_of(halfspaces.begin(), halfspaces.end(), [&](const Halfspace& h) { return h.contains(x); });
}

VectorQ region_centroid(const DepthRegion& region) {
  if (region.empty()) throw PreconditionError("centroid of an empty region");
  // Every facet of M is cut out by one of its defining halfspaces: the
  // vertices tight on it span a face of dimension dim - 1.
  const auto& vs = region.vertices;
  std::vector<std::vector<Index>> tight_sets(region.halfspaces.size());
  if (region.active.size() == vs.size()) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (const Index j : region.active[i]) tight_sets[static_cast<std::size_t>(j)].push_back(static_cast<Index>(i));
  } else {
    for (std::size_t j = 0; j < region.halfspaces.size(); ++j)
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (region.halfspaces[j].slack(vs[i]) == 0) tight_sets[j].push_back(static_cast<Index>(i));
  }
  std::set<std::vector<Index>> facets;
  for (auto& tight : tight_sets) {
    if (tight.size() == vs.size() || static_cast<Index>(tight.size()) < region.dim) continue;
    if (facets.count(tight)) continue;
    std::vector<VectorQ> face;
    for (const Index i : tight) face.push_back(vs[static_cast<std::size_t>(i)]);
    if (region_dim(face) == region.dim - 1) facets.insert(std::move(tight));
  }
  const std::vector<std::vector<Index>> list(facets.begin(), facets.end());
  return centroid_impl(vs, &list);
}

RegionBuilder::RegionBuilder(PointCloud cloud, bool force) : cloud_(std::move(cloud)) {
  if (const auto witness = check_general_position(cloud_)) {
    if (!force) throw GeneralPositionError("point cloud is not in general position");
    degenerate_ = true;
  }
  const Index n = cloud_.size();
  const Index p = cloud_.dim();

  std::vector<std::vector<Index>> subsets;
  subsets.reserve(static_cast<std::size_t>(binomial(n, p)));
  for_each_subset(n, p, [&](std::span<const Index> s) {
    subsets.emplace_back(s.begin(), s.end());
    return true;
  });

  const auto pts = cloud_.scaled_points();
  std::vector<std::optional<SampleHyperplane>> planes(subsets.size());
  parallel_for(static_cast<Index>(subsets.size()), [&](Index begin, Index end) {
    MatrixZ diffs(p - 1, p);
    for (Index t = begin; t < end; ++t) {
      const auto& s = subsets[static_cast<std::size_t>(t)];
      const VectorZ& base = pts[static_cast<std::size_t>(s[0])];
      for (Index k = 1; k < p; ++k) diffs.row(k - 1) = (pts[static_cast<std::size_t>(s[static_cast<std::size_t>(k)])] - base).transpose();
      VectorZ normal = primitive(cross<Integer>(diffs));
      if (is_zero(normal)) continue;  // only on degenerate input
      Index first = 0;
      while (normal[first] == 0) ++first;
      if (normal[first] < 0) normal = -normal;
      Integer offset = 0;
      for (Index i = 0; i < p; ++i) offset += normal[i] * base[i];
      SampleHyperplane h;
      h.indices = s;
      for (const auto& x : pts) {
        Integer v = -offset;
        for (Index i = 0; i < p; ++i) v += normal[i] * x[i];
        h.below += v < 0;
        h.above += v > 0;
      }
      h.plane.normal = to_rational(normal);
      h.plane.offset = h.plane.normal.dot(cloud_.point(s[0]));
      h.plane.defining_indices = s;
      planes[static_cast<std::size_t>(t)] = std::move(h);
    }
  });
  for (auto& h : planes)
    if (h) planes_.push_back(std::move(*h));

  bounds_ = {cloud_.points().rowwise().minCoeff(), cloud_.points().rowwise().maxCoeff()};
}

std::vector<Halfspace> RegionBuilder::halfspaces(Index kappa, HalfspaceFilter filter) const {
  if (kappa < 1 || kappa > cloud_.size())
    throw PreconditionError("depth level must satisfy 1 <= kappa <= n (got " + std::to_string(kappa) + ")");
  const auto keep = [&](Index cut) { return filter == HalfspaceFilter::at_most ? cut <= kappa - 1 : cut == kappa - 1; };
  std::vector<Halfspace> out;
  for (const auto& h : planes_) {
    if (keep(h.below)) out.push_back({h.plane, Side::above, h.below});
    if (keep(h.above)) out.push_back({h.plane, Side::below, h.above});
  }
  return out;
}

DepthRegion RegionBuilder::region(Index kappa, const RegionOptions& options) const {
  DepthRegion r;
  r.level_kappa = kappa;
  r.degenerate = degenerate_;
  r.halfspaces = halfspaces(kappa, options.filter);
  if (r.halfspaces.empty()) {
    // Only possible with the exactly-k-1 filter.
    r.status = RegionStatus::unbounded;
    return r;
  }

  std::shared_ptr<const VertexEnumeration> cached;
  const std::pair<Index, int> key{kappa, static_cast<int>(options.filter)};
  {
    const std::lock_guard lock(cache_mutex_);
    if (const auto it = cache_.find(key); it != cache_.end()) cached = it->second;
  }
  if (!cached) {
    VertexOptions vo;
    vo.bounds = bounds_;
    vo.infeasibility_certificate = false;
    cached = std::make_shared<const VertexEnumeration>(region_vertices(r.halfspaces, vo));
    const std::lock_guard lock(cache_mutex_);
    cache_.emplace(key, cached);
  }
  const VertexEnumeration& ve = *cached;
  r.status = ve.status;
  r.vertices = ve.vertices;
  r.active = ve.active;
  if (r.status == RegionStatus::empty && options.infeasibility_certificate)
    r.infeasibility_certificate = infeasibility_certificate(r.halfspaces);
  r.dim = region_dim(r.vertices);

  if (!options.certify_vertices && !options.boundary_sweep) return r;

  DepthOptions depth_options;
  depth_options.force = degenerate_;
  depth_options.skip_general_position_check = true;
  const DepthCalculator calc(cloud_, depth_options);
  bool ok = true;
  std::string failure;
  if (options.certify_vertices) {
    for (const auto& v : r.vertices) {
      const Index k = calc.depth(v).depth.kappa;
      if (k < kappa) {
        ok = false;
        failure = "vertex with depth " + std::to_string(k) + " below level " + std::to_string(kappa);
        break;
      }
    }
  }
  if (ok && options.boundary_sweep) {
    for (std::size_t i = 0; i < r.vertices.size() && ok; ++i) {
      std::set<std::vector<Rational>> seen;
      for (const Index j : ve.active[i]) {
        const Halfspace& h = r.halfspaces[static_cast<std::size_t>(j)];
        const VectorQ inward = h.side == Side::above ? h.boundary.normal : VectorQ(-h.boundary.normal);
        if (!seen.insert({inward.begin(), inward.end()}).second) continue;
        Rational scale = 0;
        for (Index t = 0; t < inward.size(); ++t) scale = std::max(scale, abs(inward[t]));
        const VectorQ outside = r.vertices[i] - inward * Rational(1, 1024) / scale;
        if (calc.depth(outside).depth.kappa >= kappa) {
          ok = false;
          failure = "point just outside an active constraint still has depth >= level";
          break;
        }
      }
    }
  }
  r.certified = ok;
  if (!ok && !degenerate_) throw CertificationError("depth region certification failed: " + failure);
  return r;
}

std::vector<Halfspace> region_halfspaces(const PointCloud& cloud, Index kappa, HalfspaceFilter filter, bool force) {
  return RegionBuilder(cloud, force).halfspaces(kappa, filter);
}

DepthRegion depth_region(const PointCloud& cloud, Index kappa, const RegionOptions& options) {
  if (kappa < 1)
    throw PreconditionError("depth level must be positive: the region at level 0 is all of R^p");
  return RegionBuilder(cloud, options.force).region(kappa, options);
}

}  // namespace tukey
