#include "tukey/datasets.hpp"

#include "tukey/median.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace tukey {
namespace {

constexpr int gaussian_retries = 100;
constexpr long long truncation = 1'000'000'000;  // 9 decimals

NamedCloud certified(std::string name, PointCloud cloud, std::variant<Generated, Ingested> provenance) {
  NamedCloud c{std::move(name), std::move(cloud), std::move(provenance), false};
  c.certified_general_position = !check_general_position(c.cloud).has_value();
  return c;
}

PointCloud rows(std::initializer_list<std::initializer_list<const char*>> text) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : text) {
    auto& r = out.emplace_back();
    for (const char* v : row) r.push_back(parse_rational(v));
  }
  return PointCloud::from_rows(out);
}

// Uniform on (0, 1) from the top 53 bits; avoids the implementation-defined
// std distributions so generated files match across standard libraries.
double open_unit(std::mt19937_64& rng) {
  while (true) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u > 0) return u;
  }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::map<std::string, std::string> parse_params(std::string_view text, std::string_view recipe) {
  std::map<std::string, std::string> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw PreconditionError("malformed recipe parameter '" + item + "' in '" + std::string(recipe) + "'");
    out[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  return out;
}

long long parse_int(const std::map<std::string, std::string>& params, const std::string& key,
                    std::string_view recipe) {
  const auto it = params.find(key);
  if (it == params.end()) throw PreconditionError("recipe '" + std::string(recipe) + "' is missing " + key);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw PreconditionError("recipe parameter " + key + "='" + it->second + "' is not an integer");
  }
}

// Output of search_bound_attaining(3, 7, /*seed=*/1, ...); kappa* = 3 = floor((7-3+2)/2).
PointCloud frozen_p3() {
  return rows({{"0.97", "0.028", "0.044"},
               {"-1.017", "0.007", "-0.022"},
               {"-0.034", "1.012", "-0.026"},
               {"-0.017", "-1.001", "0.009"},
               {"0.014", "-0.019", "1.004"},
               {"0.036", "-0.026", "-0.979"},
               {"0.001", "-0.008", "0.005"}});
}

}  // namespace

NamedCloud gen_gaussian(Index n, Index p, std::uint64_t seed) {
  if (p < 1 || n <= p)
    throw PreconditionError("gaussian generator needs n > p >= 1 (got n=" + std::to_string(n) +
                            ", p=" + std::to_string(p) + ")");
  std::mt19937_64 rng(seed);
  const std::string name =
      "gaussian:n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",seed=" + std::to_string(seed);
  for (int attempt = 0; attempt < gaussian_retries; ++attempt) {
    MatrixQ pts(p, n);
    bool have_spare = false;
    double spare = 0;
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < p; ++i) {
        double z;
        if (have_spare) {
          z = spare;
          have_spare = false;
        } else {
          // Box-Muller
          const double r = std::sqrt(-2.0 * std::log(open_unit(rng)));
          const double t = 2.0 * std::numbers::pi * open_unit(rng);
          z = r * std::cos(t);
          spare = r * std::sin(t);
          have_spare = true;
        }
        pts(i, j) = Rational(static_cast<long long>(std::trunc(z * truncation)), truncation);
      }
    PointCloud cloud(std::move(pts));
    if (!check_general_position(cloud)) return {name, std::move(cloud), Generated{seed, name}, true};
  }
  throw std::runtime_error("gaussian generator exhausted its retries for " + name);
}

NamedCloud gen_square4() {
  return certified("square4", rows({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1", "1"}}), Generated{0, "square4"});
}

NamedCloud gen_triangle_plus_center() {
  return certified("triangle-center", rows({{"0", "0"}, {"4", "0"}, {"2", "4"}, {"2", "1.5"}}),
                   Generated{0, "triangle-center"});
}

NamedCloud gen_bound_attaining(Index p, std::uint64_t seed) {
  if (p == 2) {
    NamedCloud c = gen_square4();
    c.provenance = Generated{seed, "bound-attaining:p=2"};
    return c;
  }
  if (p == 3) return certified("bound-attaining:p=3", frozen_p3(), Generated{seed, "bound-attaining:p=3"});
  throw PreconditionError("no bound-attaining configuration for p=" + std::to_string(p) + " (supported: 2, 3)");
}

std::optional<NamedCloud> search_bound_attaining(Index p, Index n, std::uint64_t seed, int attempts) {
  if (p < 1 || n <= p) throw PreconditionError("search needs n > p >= 1");
  // Base: cross-polytope vertices (2p of them) cycled until n - 1 points,
  // then the center.
  MatrixQ base = MatrixQ::Zero(p, n);
  for (Index j = 0; j + 1 < n; ++j) {
    const Index axis = (j / 2) % p;
    base(axis, j) = (j % 2 == 0) ? 1 : -1;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> jitter(-50, 50);
  const Index bound = depth_bounds(n, p).kappa_hi_thm1;
  for (int a = 0; a < attempts; ++a) {
    MatrixQ pts = base;
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < p; ++i) pts(i, j) += Rational(jitter(rng), 1000);
    PointCloud cloud(std::move(pts));
    if (check_general_position(cloud)) continue;
    if (max_depth(cloud).kappa_star != bound) continue;
    const std::string name = "bound-attaining:p=" + std::to_string(p);
    return NamedCloud{name, std::move(cloud), Generated{seed, name}, true};
  }
  return std::nullopt;
}

NamedCloud generate(std::string_view recipe) {
  const auto colon = recipe.find(':');
  const std::string head(recipe.substr(0, colon));
  const auto params = colon == std::string_view::npos ? std::map<std::string, std::string>{}
                                                      : parse_params(recipe.substr(colon + 1), recipe);
  const auto only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params)
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
        throw PreconditionError("unknown parameter '" + k + "' in recipe '" + std::string(recipe) + "'");
  };
  if (head == "square4") {
    only({});
    return gen_square4();
  }
  if (head == "triangle-center") {
    only({});
    return gen_triangle_plus_center();
  }
  if (head == "bound-attaining") {
    only({"p", "seed"});
    const auto seed = params.count("seed") ? parse_int(params, "seed", recipe) : 0;
    return gen_bound_attaining(parse_int(params, "p", recipe), static_cast<std::uint64_t>(seed));
  }
  if (head == "gaussian") {
    only({"n", "p", "seed"});
    const auto seed = parse_int(params, "seed", recipe);
    if (seed < 0) throw PreconditionError("seed must be nonnegative");
    return gen_gaussian(parse_int(params, "n", recipe), parse_int(params, "p", recipe),
                        static_cast<std::uint64_t>(seed));
  }
  throw PreconditionError("unknown recipe '" + std::string(recipe) +
                          "' (expected square4, triangle-center, bound-attaining:p=.., gaussian:n=..,p=..,seed=..)");
}

NamedCloud load_csv(const std::filesystem::path& path, bool header) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::vector<Rational>> data;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (header && row == 1) continue;
    if (trim(line).empty()) continue;
    std::vector<Rational> values;
    std::stringstream ss(line);
    std::string field;
    std::size_t column = 0;
    while (std::getline(ss, field, ',')) {
      ++column;
      try {
        values.push_back(parse_rational(trim(field)));
      } catch (const std::exception&) {
        throw IoError(path.string() + ": row " + std::to_string(row) + ", column " + std::to_string(column) +
                      ": not a number: '" + trim(field) + "'");
      }
    }
    if (!line.empty() && line.back() == ',')
      throw IoError(path.string() + ": row " + std::to_string(row) + ": trailing empty field");
    if (!data.empty() && values.size() != data.front().size())
      throw IoError(path.string() + ": row " + std::to_string(row) + " has " + std::to_string(values.size()) +
                    " fields, expected " + std::to_string(data.front().size()));
    data.push_back(std::move(values));
  }
  if (data.empty()) throw IoError(path.string() + ": no data rows");
  const auto n = static_cast<Index>(data.size());
  const auto p = static_cast<Index>(data.front().size());
  if (n <= p)
    throw PreconditionError(path.string() + ": need more points than dimensions (n=" + std::to_string(n) +
                            ", p=" + std::to_string(p) + ")");
  return certified(path.stem().string(), PointCloud::from_rows(data), Ingested{path});
}

std::string csv_text(const PointCloud& cloud) {
  std::string out;
  for (Index j = 0; j < cloud.size(); ++j) {
    for (Index i = 0; i < cloud.dim(); ++i) {
      if (i) out += ',';
      out += to_exact_string(cloud.points()(i, j));
    }
    out += '\n';
  }
  return out;
}

void save_csv(const PointCloud& cloud, const std::filesystem::path& path) { write_file_atomic(path, csv_text(cloud)); }

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace tukey
