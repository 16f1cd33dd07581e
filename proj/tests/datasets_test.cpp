#include "support.hpp"

#include "tukey/datasets.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace tukey {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tukey_datasets_test";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path path = scratch(name);
  std::ofstream(path) << text;
  return path;
}

TEST(Generators, SquareAndTriangle) {
  const NamedCloud s = gen_square4();
  EXPECT_EQ(s.cloud, test::cloud({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1", "1"}}));
  EXPECT_TRUE(s.certified_general_position);
  const NamedCloud t = gen_triangle_plus_center();
  EXPECT_EQ(t.cloud.point(3), test::vec({"2", "1.5"}));
  EXPECT_TRUE(t.certified_general_position);
}

TEST(Generators, GaussianIsSeedDeterministic) {
  const NamedCloud a = gen_gaussian(20, 3, 7);
  const NamedCloud b = gen_gaussian(20, 3, 7);
  EXPECT_EQ(csv_text(a.cloud), csv_text(b.cloud));
  EXPECT_NE(csv_text(a.cloud), csv_text(gen_gaussian(20, 3, 8).cloud));
  EXPECT_TRUE(a.certified_general_position);
  EXPECT_EQ(std::get<Generated>(a.provenance).seed, 7u);
}

TEST(Generators, GaussianCoordinatesHaveNineDecimals) {
  const PointCloud c = gen_gaussian(25, 5, 1).cloud;
  for (Index i = 0; i < c.size(); ++i)
    for (Index j = 0; j < c.dim(); ++j) EXPECT_EQ(boost::multiprecision::denominator(Rational(c.point(i)[j] * Rational(1000000000))), 1);
}

TEST(Generators, GaussianNeedsMorePointsThanDimensions) { EXPECT_THROW(gen_gaussian(2, 2, 0), PreconditionError); }

TEST(Generators, BoundAttaining) {
  EXPECT_EQ(gen_bound_attaining(2).cloud, gen_square4().cloud);
  const NamedCloud c = gen_bound_attaining(3);
  EXPECT_TRUE(c.certified_general_position);
  EXPECT_EQ(c.cloud.dim(), 3);
  EXPECT_THROW(gen_bound_attaining(4), PreconditionError);
}

TEST(Generators, Recipes) {
  EXPECT_EQ(generate("square4").cloud, gen_square4().cloud);
  EXPECT_EQ(generate("triangle-center").cloud, gen_triangle_plus_center().cloud);
  EXPECT_EQ(generate("gaussian:n=12,p=3,seed=3").cloud, gen_gaussian(12, 3, 3).cloud);
  EXPECT_EQ(generate("bound-attaining:p=3").cloud, gen_bound_attaining(3).cloud);
  EXPECT_THROW(generate("hexagon"), PreconditionError);
  EXPECT_THROW(generate("gaussian:n=12,p=3"), PreconditionError);
  EXPECT_THROW(generate("gaussian:n=x,p=3,seed=1"), PreconditionError);
}

TEST(Csv, RoundTripsSquare) {
  const fs::path path = write("sq4.csv", "0,0\n1,0\n0,1\n1,1\n");
  const NamedCloud c = load_csv(path);
  EXPECT_EQ(c.cloud, gen_square4().cloud);
  EXPECT_TRUE(c.certified_general_position);
  EXPECT_EQ(std::get<Ingested>(c.provenance).path, path);
}

TEST(Csv, SaveThenLoadIsExact) {
  const PointCloud c = gen_gaussian(10, 3, 4).cloud;
  const fs::path path = scratch("g.csv");
  save_csv(c, path);
  EXPECT_EQ(load_csv(path).cloud, c);
}

TEST(Csv, HeaderIsSkippedWhenFlagged) {
  const fs::path path = write("header.csv", "x,y\n0,0\n1,0\n0,1\n");
  EXPECT_EQ(load_csv(path, true).cloud.size(), 3);
  EXPECT_THROW(load_csv(path, false), IoError);
}

TEST(Csv, RaggedRowNamesTheRow) {
  const fs::path path = write("ragged.csv", "0,0\n1,0\n0,1,2\n1,1\n");
  try {
    load_csv(path);
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
  }
}

TEST(Csv, NonNumericField) { EXPECT_THROW(load_csv(write("bad.csv", "0,0\n1,abc\n0,1\n")), IoError); }

TEST(Csv, TooFewRows) {
  EXPECT_THROW(load_csv(write("few.csv", "0,0,0\n1,0,0\n0,1,0\n")), PreconditionError);
}

TEST(Csv, MissingFile) { EXPECT_THROW(load_csv(scratch("does_not_exist.csv")), IoError); }

TEST(Csv, DegenerateCloudIsLoadedButNotCertified) {
  const NamedCloud c = load_csv(write("line.csv", "0,0\n1,1\n2,2\n5,0\n"));
  EXPECT_FALSE(c.certified_general_position);
}

TEST(Files, AtomicWriteReplacesContent) {
  const fs::path path = scratch("atomic.txt");
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, "second");
}

}  // namespace
}  // namespace tukey
