#include "support.hpp"

#include "tukey/datasets.hpp"
#include "tukey/depth.hpp"
#include "tukey/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace tukey {
namespace {

using test::cloud;
using test::q;
using test::vec;

Index kappa(const VectorQ& x, const PointCloud& c) { return tukey_depth(x, c).depth.kappa; }

TEST(TukeyDepth, SquareCenter) {
  const DepthResult r = tukey_depth(vec({"0.5", "0.5"}), test::sq4());
  EXPECT_EQ(r.depth.kappa, 2);
  EXPECT_EQ(r.depth.n, 4);
  EXPECT_EQ(r.depth.lambda(), Rational(1, 2));
  EXPECT_FALSE(r.degenerate);
}

TEST(TukeyDepth, HullVertexHasDepthOne) { EXPECT_EQ(kappa(vec({"0", "0"}), test::sq4()), 1); }

TEST(TukeyDepth, OutsideHullHasDepthZero) { EXPECT_EQ(kappa(vec({"10", "10"}), test::sq4()), 0); }

TEST(TukeyDepth, TriangleInteriorSample) { EXPECT_EQ(kappa(vec({"2", "1.5"}), test::t4()), 2); }

TEST(TukeyDepth, WitnessRealizesDepth) {
  const PointCloud c = gen_gaussian(11, 3, 4).cloud;
  for (Index i = 0; i < c.size(); ++i) {
    const VectorQ x = (c.point(i) + c.point((i + 1) % c.size())) / Rational(2);
    const DepthResult r = tukey_depth(x, c);
    EXPECT_EQ(closed_count(c, r.witness.vector, x), r.depth.kappa);
  }
}

TEST(TukeyDepth, OneDimensional) {
  const PointCloud c = cloud({{"1"}, {"2"}, {"3"}});
  EXPECT_EQ(kappa(vec({"2"}), c), 2);
  EXPECT_EQ(kappa(vec({"1.5"}), c), 1);
  EXPECT_EQ(kappa(vec({"4"}), c), 0);
}

TEST(TukeyDepth, RefusesDegenerateCloudUnlessForced) {
  const PointCloud c = cloud({{"0", "0"}, {"1", "1"}, {"2", "2"}, {"5", "0"}});
  EXPECT_THROW(tukey_depth(vec({"1", "0.5"}), c), GeneralPositionError);
  DepthOptions o;
  o.force = true;
  const DepthResult r = tukey_depth(vec({"1", "1"}), c, o);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.depth.kappa, depth_oracle_exhaustive(vec({"1", "1"}), c));
}

TEST(TukeyDepth, WrongDimensionThrows) { EXPECT_THROW(tukey_depth(vec({"1"}), test::sq4()), PreconditionError); }

TEST(TukeyDepth, AffineInvariant) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-5, 5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PointCloud c = gen_gaussian(9, 2 + static_cast<Index>(seed % 2), seed).cloud;
    const Index p = c.dim();
    MatrixQ a(p, p);
    do {
      for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < p; ++j) a(i, j) = Rational(d(rng), 1 + (d(rng) + 5) % 3);
    } while (determinant(a) == 0);
    VectorQ b(p);
    for (Index i = 0; i < p; ++i) b[i] = Rational(d(rng), 7);
    const PointCloud ac = affine_transform(c, a, b);
    for (Index i = 0; i < c.size(); ++i) {
      const VectorQ x = (c.point(i) + c.point(0) + c.point(1)) / Rational(3);
      EXPECT_EQ(kappa(x, c), kappa(VectorQ(a * x + b), ac));
    }
  }
}

TEST(TukeyDepth, MatchesExhaustiveOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PointCloud c = gen_gaussian(6 + static_cast<Index>(seed % 5), 2 + static_cast<Index>(seed % 2), seed).cloud;
    const DepthCalculator calc(c);
    for (Index i = 0; i < c.size(); ++i) {
      EXPECT_EQ(calc.depth(c.point(i)).depth.kappa, depth_oracle_exhaustive(c.point(i), c));
      const VectorQ mid = (c.point(i) + c.point((i + 2) % c.size())) / Rational(2);
      EXPECT_EQ(calc.depth(mid).depth.kappa, depth_oracle_exhaustive(mid, c));
    }
  }
}

TEST(DepthAllSamples, SquareCornersAreOne) {
  const SampleDepths s = depth_all_samples(test::sq4());
  ASSERT_EQ(s.depths.size(), 4u);
  for (const auto& d : s.depths) EXPECT_EQ(d.depth.kappa, 1);
  EXPECT_EQ(s.max_kappa, 1);
  EXPECT_EQ(s.argmax.size(), 4u);
}

TEST(DepthAllSamples, TriangleWithCenter) {
  const SampleDepths s = depth_all_samples(test::t4());
  EXPECT_EQ(s.depths[3].depth.kappa, 2);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(s.depths[static_cast<std::size_t>(i)].depth.kappa, 1);
  EXPECT_EQ(s.argmax, (std::vector<Index>{3}));
}

TEST(DepthAllSamples, SimplexVerticesAreOne) {
  const SampleDepths s = depth_all_samples(cloud({{"0", "0"}, {"3", "1"}, {"1", "2"}}));
  for (const auto& d : s.depths) EXPECT_EQ(d.depth.kappa, 1);
}

TEST(DepthAllSamples, AgreesWithPerPointDepth) {
  const PointCloud c = gen_gaussian(14, 3, 2).cloud;
  const SampleDepths s = depth_all_samples(c);
  for (const auto& d : s.depths) {
    EXPECT_EQ(d.depth.kappa, kappa(c.point(d.index), c));
    EXPECT_GE(d.depth.kappa, 1);
  }
}

TEST(HalfspaceSymmetric, SquareCenterIsSymmetric) { EXPECT_TRUE(halfspace_symmetric(test::sq4(), vec({"0.5", "0.5"}))); }

TEST(HalfspaceSymmetric, SquareCornerIsNot) { EXPECT_FALSE(halfspace_symmetric(test::sq4(), vec({"0", "0"}))); }

TEST(HalfspaceSymmetric, NeverInThreeDimensions) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PointCloud c = gen_gaussian(9, 3, seed).cloud;
    for (Index i = 0; i < c.size(); ++i) EXPECT_FALSE(halfspace_symmetric(c, c.point(i)));
    EXPECT_FALSE(halfspace_symmetric(c, VectorQ::Zero(3)));
  }
}

TEST(PerturbDirection, RotatesOnPointsOffAndKeepsTheRest) {
  // Line through z = (0.5, -0.25) and (0,0); the other corners stay above it.
  const PointCloud c = test::sq4();
  const VectorQ z = vec({"0.5", "-0.25"});
  const VectorQ u = vec({"1", "2"});
  const std::vector<Index> on{0};
  const Direction out = perturb_direction(Direction{u}, z, on, c);
  EXPECT_LT(out.vector.dot(VectorQ(z - c.point(0))), 0);
  for (Index i = 1; i < 4; ++i)
    EXPECT_EQ(sign(out.vector.dot(VectorQ(z - c.point(i)))), sign(u.dot(VectorQ(z - c.point(i)))));
}

TEST(PerturbDirection, EmptyOnSetLeavesDirection) {
  const VectorQ u = vec({"0", "1"});
  const Direction out = perturb_direction(Direction{u}, vec({"0.5", "0.5"}), {}, test::sq4());
  EXPECT_EQ(out.vector, u);
}

TEST(PerturbDirection, AnchorOnAnOnPointThrows) {
  const std::vector<Index> on{0};
  EXPECT_THROW(perturb_direction(Direction{vec({"0", "1"})}, vec({"0", "0"}), on, test::sq4()), PreconditionError);
}

TEST(PerturbDirection, OffPlaneIndexThrows) {
  const std::vector<Index> on{2};
  EXPECT_THROW(perturb_direction(Direction{vec({"0", "1"})}, vec({"0.5", "0"}), on, test::sq4()), PreconditionError);
}

TEST(MaxOpenHalfspace, CountsAndDirection) {
  std::vector<VectorZ> vs;
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}})
    vs.push_back((VectorZ(2) << a, b).finished());
  const OpenHalfspace h = max_open_halfspace(vs, 2);
  EXPECT_EQ(h.count, 3);
  Index hits = 0;
  for (const auto& v : vs) hits += h.direction.dot(to_rational(v)) > 0;
  EXPECT_EQ(hits, 3);
}

}  // namespace
}  // namespace tukey
