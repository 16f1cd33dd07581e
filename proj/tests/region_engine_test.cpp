#include "support.hpp"

#include "tukey/datasets.hpp"
#include "tukey/depth.hpp"
#include "tukey/median.hpp"
#include "tukey/region.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace tukey {
namespace {

using test::q;
using test::vec;

Halfspace geq(const VectorQ& normal, const Rational& offset) {
  return Halfspace{Hyperplane{normal, offset, {}}, Side::above, 0};
}

std::vector<Halfspace> unit_square() {
  return {geq(vec({"1", "0"}), 0), geq(vec({"-1", "0"}), -1), geq(vec({"0", "1"}), 0), geq(vec({"0", "-1"}), -1)};
}

std::vector<VectorQ> sorted(std::vector<VectorQ> vs) {
  std::sort(vs.begin(), vs.end(), [](const VectorQ& a, const VectorQ& b) { return lex_compare(a, b) < 0; });
  return vs;
}

// Sample i is a hull vertex iff no p+1 other samples span a simplex holding it.
std::vector<VectorQ> hull_vertices(const PointCloud& c) {
  const Index p = c.dim();
  std::vector<VectorQ> out;
  for (Index i = 0; i < c.size(); ++i) {
    std::vector<Index> others;
    for (Index j = 0; j < c.size(); ++j)
      if (j != i) others.push_back(j);
    bool inside = false;
    for_each_subset(static_cast<Index>(others.size()), p + 1, [&](std::span<const Index> s) {
      std::vector<VectorQ> simplex;
      for (const Index k : s) simplex.push_back(c.point(others[static_cast<std::size_t>(k)]));
      const int whole = orientation<Rational>(std::span<const VectorQ>(simplex));
      bool in = whole != 0;
      for (Index f = 0; f <= p && in; ++f) {
        std::vector<VectorQ> swapped = simplex;
        swapped[static_cast<std::size_t>(f)] = c.point(i);
        in = orientation<Rational>(std::span<const VectorQ>(swapped)) == whole;
      }
      inside = in;
      return !inside;
    });
    if (!inside) out.push_back(c.point(i));
  }
  return sorted(out);
}

TEST(RegionVertices, UnitSquareCorners) {
  const auto hs = unit_square();
  const VertexEnumeration ve = region_vertices(hs);
  EXPECT_EQ(ve.status, RegionStatus::bounded);
  EXPECT_EQ(ve.vertices,
            sorted({vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"}), vec({"1", "1"})}));
  ASSERT_EQ(ve.active.size(), 4u);
  for (const auto& a : ve.active) EXPECT_EQ(a.size(), 2u);
}

TEST(RegionVertices, InfeasibleIntervalHasCertificate) {
  const std::vector<Halfspace> hs{geq(vec({"1"}), 0), geq(vec({"-1"}), 1)};
  const VertexEnumeration ve = region_vertices(hs);
  EXPECT_EQ(ve.status, RegionStatus::empty);
  EXPECT_TRUE(ve.vertices.empty());
  ASSERT_TRUE(ve.infeasibility_certificate.has_value());
  const VectorQ& y = *ve.infeasibility_certificate;
  Rational a = 0;
  Rational b = 0;
  for (std::size_t j = 0; j < hs.size(); ++j) {
    EXPECT_GE(y[static_cast<Index>(j)], 0);
    a += y[static_cast<Index>(j)] * hs[j].boundary.normal[0];
    b += y[static_cast<Index>(j)] * hs[j].boundary.offset;
  }
  EXPECT_EQ(a, 0);
  EXPECT_GT(b, 0);
}

TEST(RegionVertices, HalfplaneIsUnbounded) {
  const std::vector<Halfspace> hs{geq(vec({"1", "0"}), 0), geq(vec({"0", "1"}), 0)};
  EXPECT_EQ(region_vertices(hs).status, RegionStatus::unbounded);
}

TEST(RegionVertices, SquareLevelTwoIsCenter) {
  const auto hs = region_halfspaces(test::sq4(), 2);
  const VertexEnumeration ve = region_vertices(hs);
  EXPECT_EQ(ve.vertices, std::vector<VectorQ>{vec({"0.5", "0.5"})});
}

TEST(RegionDim, Cases) {
  EXPECT_EQ(region_dim({}), -1);
  const std::vector<VectorQ> one{vec({"1", "2"})};
  EXPECT_EQ(region_dim(one), 0);
  const std::vector<VectorQ> seg{vec({"0", "0"}), vec({"2", "0"})};
  EXPECT_EQ(region_dim(seg), 1);
  EXPECT_EQ(region_dim(region_vertices(unit_square()).vertices), 2);
}

TEST(Centroid, Singleton) {
  const std::vector<VectorQ> v{vec({"0.5", "0.5"})};
  EXPECT_EQ(polytope_centroid(v), vec({"0.5", "0.5"}));
}

TEST(Centroid, UnitSquare) {
  EXPECT_EQ(polytope_centroid(region_vertices(unit_square()).vertices), vec({"0.5", "0.5"}));
}

TEST(Centroid, Segment) {
  const std::vector<VectorQ> v{vec({"0", "0"}), vec({"2", "0"})};
  EXPECT_EQ(polytope_centroid(v), vec({"1", "0"}));
}

TEST(Centroid, AreaWeightedNotVertexAverage) {
  // Trapezoid: the vertex average is (1.5, 0.5), the area centroid sits lower.
  const std::vector<VectorQ> v{vec({"0", "0"}), vec({"3", "0"}), vec({"2", "1"}), vec({"1", "1"})};
  EXPECT_EQ(polytope_centroid(v), vec({"3/2", "5/12"}));
}

TEST(Centroid, TriangleInThreeSpace) {
  const std::vector<VectorQ> v{vec({"0", "0", "1"}), vec({"3", "0", "1"}), vec({"0", "3", "4"})};
  EXPECT_EQ(polytope_centroid(v), vec({"1", "1", "2"}));
}

TEST(Centroid, Cube) {
  std::vector<VectorQ> v;
  for (int i = 0; i < 8; ++i) v.push_back(vec({i & 1 ? "2" : "0", i & 2 ? "2" : "0", i & 4 ? "2" : "0"}));
  EXPECT_EQ(polytope_centroid(v), vec({"1", "1", "1"}));
}

TEST(Centroid, EmptyThrows) { EXPECT_THROW(polytope_centroid({}), PreconditionError); }

TEST(DepthRegion, SquareLevels) {
  const DepthRegion d1 = depth_region(test::sq4(), 1);
  EXPECT_EQ(d1.dim, 2);
  EXPECT_EQ(d1.status, RegionStatus::bounded);
  EXPECT_EQ(d1.vertices, sorted({vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"}), vec({"1", "1"})}));
  EXPECT_TRUE(d1.certified);

  const DepthRegion d2 = depth_region(test::sq4(), 2);
  EXPECT_EQ(d2.dim, 0);
  EXPECT_EQ(d2.vertices, std::vector<VectorQ>{vec({"0.5", "0.5"})});
  EXPECT_EQ(region_centroid(d2), vec({"0.5", "0.5"}));

  const DepthRegion d3 = depth_region(test::sq4(), 3);
  EXPECT_EQ(d3.dim, -1);
  EXPECT_TRUE(d3.empty());
  EXPECT_EQ(d3.status, RegionStatus::empty);
  EXPECT_TRUE(d3.infeasibility_certificate.has_value());
}

TEST(DepthRegion, LevelOutOfRangeThrows) {
  EXPECT_THROW(depth_region(test::sq4(), 0), PreconditionError);
  EXPECT_THROW(depth_region(test::sq4(), 5), PreconditionError);
  EXPECT_THROW(region_halfspaces(test::sq4(), 0), PreconditionError);
}

TEST(DepthRegion, TopLevelIsEmpty) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const PointCloud c = gen_gaussian(8, 2 + static_cast<Index>(seed % 2), seed).cloud;
    EXPECT_TRUE(depth_region(c, c.size()).empty());
  }
}

TEST(DepthRegion, LevelOneIsConvexHull) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const PointCloud c = gen_gaussian(10, 2 + static_cast<Index>(seed % 2), seed).cloud;
    EXPECT_EQ(depth_region(c, 1).vertices, hull_vertices(c));
  }
}

TEST(DepthRegion, NestedAndSound) {
  const PointCloud c = gen_gaussian(12, 3, 8).cloud;
  const RegionBuilder b(c);
  const Index ks = max_depth(b).kappa_star;
  for (Index k = 1; k <= ks; ++k) {
    const DepthRegion inner = b.region(k + 1);
    const DepthRegion outer = b.region(k);
    for (const auto& v : inner.vertices) EXPECT_TRUE(outer.contains(v));
    for (const auto& v : outer.vertices) EXPECT_GE(tukey_depth(v, c).depth.kappa, k);
  }
}

TEST(DepthRegion, CompleteOnGrid) {
  // No grid point deeper than k may fall outside D_k.
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const PointCloud c = gen_gaussian(8 + static_cast<Index>(seed), 2, seed).cloud;
    const DepthCalculator calc(c);
    const RegionBuilder b(c);
    std::vector<DepthRegion> levels;
    for (Index k = 1; k <= 4; ++k) levels.push_back(b.region(k));
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        const VectorQ x = vec({"-2.5", "-2.5"}) + VectorQ((VectorQ(2) << Rational(i, 8), Rational(j, 8)).finished());
        const Index k = calc.depth(x).depth.kappa;
        for (Index l = 1; l <= std::min<Index>(k, 4); ++l) EXPECT_TRUE(levels[static_cast<std::size_t>(l - 1)].contains(x));
      }
  }
}

TEST(DepthRegion, FiltersAgreeAtMaximumDepth) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const PointCloud c = gen_gaussian(10, 2 + static_cast<Index>(seed % 2), seed).cloud;
    const Index ks = max_depth(c).kappa_star;
    RegionOptions exact;
    exact.filter = HalfspaceFilter::exactly;
    EXPECT_EQ(depth_region(c, ks, exact).vertices, depth_region(c, ks).vertices);
  }
}

TEST(DepthRegion, CentroidIsAffineEquivariant) {
  const PointCloud c = gen_gaussian(9, 2, 5).cloud;
  MatrixQ a(2, 2);
  a << 2, 1, Rational(-1, 3), 1;
  const VectorQ b = vec({"1", "-0.5"});
  const PointCloud ac = affine_transform(c, a, b);
  for (Index k = 1; k <= 3; ++k) {
    const DepthRegion r = depth_region(c, k);
    if (r.empty()) continue;
    EXPECT_EQ(region_centroid(depth_region(ac, k)), VectorQ(a * region_centroid(r) + b));
  }
}

TEST(DepthRegion, ActiveSetsAreTight) {
  const DepthRegion r = depth_region(gen_gaussian(10, 3, 1).cloud, 2);
  ASSERT_EQ(r.active.size(), r.vertices.size());
  for (std::size_t v = 0; v < r.vertices.size(); ++v) {
    EXPECT_GE(static_cast<Index>(r.active[v].size()), 3);
    for (const Index h : r.active[v]) EXPECT_EQ(r.halfspaces[static_cast<std::size_t>(h)].slack(r.vertices[v]), 0);
  }
}

TEST(RegionBuilder, RepeatedLevelsGiveIdenticalRegions) {
  const RegionBuilder b(gen_gaussian(12, 2, 2).cloud);
  const DepthRegion first = b.region(3);
  const DepthRegion second = b.region(3);
  EXPECT_EQ(first.vertices, second.vertices);
  EXPECT_EQ(b.hyperplane_count(), binomial(12, 2));
}

}  // namespace
}  // namespace tukey
