#include "support.hpp"

#include "tukey/report.hpp"

#include <gtest/gtest.h>

namespace tukey {
namespace {

using test::vec;

TEST(Report, RationalsAreFractionStrings) {
  EXPECT_EQ(rational_json(Rational(3, 2)), "3/2");
  EXPECT_EQ(vector_json(vec({"0.5", "2"})), Json::parse(R"(["1/2","2/1"])"));
  EXPECT_EQ(decimal_json(vec({"1/3"})), Json::parse(R"(["0.33333333333333333333"])"));
}

TEST(Report, DepthDocument) {
  const PointCloud c = test::sq4();
  const VectorQ x = vec({"0.5", "0.5"});
  const Json doc = depth_json(c, x, tukey_depth(x, c));
  EXPECT_EQ(doc["schema_version"], schema_version);
  EXPECT_EQ(doc["kappa"], 2);
  EXPECT_EQ(doc["lambda"], "2/4");
  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["witness_direction"].size(), 2u);
}

TEST(Report, MedianDocumentFields) {
  const PointCloud c = test::t4();
  const Json doc = median_json(c, tukey_median(c));
  for (const char* key : {"schema_version", "n", "p", "kappa_star", "lambda_star", "median", "region", "flags", "effort"})
    EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(doc["median"], Json::parse(R"(["2/1","3/2"])"));
  EXPECT_EQ(doc["flags"]["sample_is_vertex"], Json::parse("[true]"));
  EXPECT_EQ(doc["effort"]["bounds"]["thm1"], 2);
  for (const auto& h : doc["region"]["halfspaces"]) {
    EXPECT_TRUE(h.contains("normal"));
    EXPECT_TRUE(h.contains("offset"));
  }
}

TEST(Report, HalfspacesPointInward) {
  const DepthRegion r = depth_region(test::sq4(), 1);
  const Json hs = halfspaces_json(r.halfspaces);
  const VectorQ center = vec({"0.5", "0.5"});
  for (const auto& h : hs) {
    const Rational a = parse_rational(h["normal"][0].get<std::string>());
    const Rational b = parse_rational(h["normal"][1].get<std::string>());
    EXPECT_GE(a * center[0] + b * center[1], parse_rational(h["offset"].get<std::string>()));
  }
}

TEST(Report, DumpIsStable) {
  const Json doc = region_json(test::sq4(), depth_region(test::sq4(), 2));
  EXPECT_EQ(dump(doc), dump(Json::parse(dump(doc))));
  EXPECT_EQ(dump(doc).back(), '\n');
}

TEST(Report, SvgOnlyForPlanarClouds) {
  const DepthRegion r = depth_region(test::sq4(), 1);
  const std::string svg = svg_plot(test::sq4(), &r, vec({"0.5", "0.5"}));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<polygon"), std::string::npos);
  EXPECT_THROW(svg_plot(gen_gaussian(6, 3, 0).cloud, nullptr, std::nullopt), PreconditionError);
}

}  // namespace
}  // namespace tukey
