#include "support.hpp"

#include "tukey/datasets.hpp"
#include "tukey/oracles.hpp"

#include <gtest/gtest.h>

namespace tukey {
namespace {

using test::vec;

GridSpec directions(Index count) {
  GridSpec s;
  s.directions = count;
  return s;
}

TEST(DirectionsOracle, SquareCenter) {
  EXPECT_EQ(depth_oracle_directions(vec({"0.5", "0.5"}), test::sq4(), directions(10000)), 2);
}

TEST(DirectionsOracle, OutsidePointWithSeparatingDirection) {
  const std::vector<VectorQ> dirs{vec({"1", "1"}), vec({"-1", "-1"})};
  EXPECT_EQ(depth_oracle_directions(vec({"-3", "-3"}), test::sq4(), dirs), 0);
}

TEST(DirectionsOracle, SingleAxisDirectionCountsRanks) {
  const PointCloud c = test::cloud({{"0", "5"}, {"1", "-2"}, {"2", "7"}, {"3", "1"}});
  const std::vector<VectorQ> dirs{vec({"1", "0"})};
  EXPECT_EQ(depth_oracle_directions(vec({"1.5", "100"}), c, dirs), 2);
}

TEST(DirectionsOracle, NeedsADirection) {
  EXPECT_THROW(depth_oracle_directions(vec({"0", "0"}), test::sq4(), directions(0)), PreconditionError);
}

TEST(ExhaustiveOracle, KnownValues) {
  EXPECT_EQ(depth_oracle_exhaustive(vec({"0.5", "0.5"}), test::sq4()), 2);
  EXPECT_EQ(depth_oracle_exhaustive(vec({"2", "1.5"}), test::t4()), 2);
  EXPECT_EQ(depth_oracle_exhaustive(vec({"1", "0"}), test::sq4()), 1);
  EXPECT_EQ(depth_oracle_exhaustive(vec({"4", "4"}), test::sq4()), 0);
}

TEST(ExhaustiveOracle, NeverAboveTheDirectionsOracle) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const PointCloud c = gen_gaussian(8, 2 + static_cast<Index>(seed % 2), seed).cloud;
    for (Index i = 0; i < c.size(); ++i) {
      const VectorQ x = (c.point(i) + c.point(0)) / 2;
      EXPECT_LE(depth_oracle_exhaustive(x, c), depth_oracle_directions(x, c, directions(500)));
    }
  }
}

TEST(ExhaustiveOracle, SizeLimits) {
  EXPECT_THROW(depth_oracle_exhaustive(VectorQ::Zero(4), gen_gaussian(8, 4, 0).cloud), PreconditionError);
  EXPECT_THROW(depth_oracle_exhaustive(VectorQ::Zero(2), gen_gaussian(15, 2, 0).cloud), PreconditionError);
}

TEST(GridOracle, SquareMaximumAtCenter) {
  GridSpec s;
  s.lo = vec({"-0.5", "-0.5"});
  s.hi = vec({"1.5", "1.5"});
  s.resolution = 101;
  const GridMedian g = median_oracle_grid(test::sq4(), s);
  EXPECT_EQ(g.max_kappa, 2);
  EXPECT_EQ(g.argmax, std::vector<VectorQ>{vec({"0.5", "0.5"})});
  EXPECT_FALSE(g.used_engine);
}

TEST(GridOracle, TriangleMaximumAtInteriorSample) {
  GridSpec s;
  s.lo = vec({"0", "0"});
  s.hi = vec({"4", "4"});
  s.resolution = 17;
  const GridMedian g = median_oracle_grid(test::t4(), s);
  EXPECT_EQ(g.max_kappa, 2);
  EXPECT_EQ(g.argmax, std::vector<VectorQ>{vec({"2", "1.5"})});
}

TEST(GridOracle, EmptyBoxThrows) {
  GridSpec s;
  s.lo = vec({"1", "0"});
  s.hi = vec({"1", "1"});
  EXPECT_THROW(median_oracle_grid(test::sq4(), s), PreconditionError);
}

}  // namespace
}  // namespace tukey
