// Named test configurations, seeded generators and CSV/JSON file handling.
#pragma once

#include "tukey/geometry.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace tukey {

struct Generated {
  std::uint64_t seed = 0;
  std::string recipe;
};
struct Ingested {
  std::filesystem::path path;
};

struct NamedCloud {
  std::string name;
  PointCloud cloud;
  std::variant<Generated, Ingested> provenance;
  /// Set only after check_general_position succeeded.
  bool certified_general_position = false;
};

/// Standard normal sample with coordinates truncated to 9 decimals, redrawn
/// until it is in general position. Same (n, p, seed), same cloud.
NamedCloud gen_gaussian(Index n, Index p, std::uint64_t seed);

/// Corners of the unit square.
NamedCloud gen_square4();

/// Triangle (0,0), (4,0), (2,4) and the interior point (2, 1.5).
NamedCloud gen_triangle_plus_center();

/// A cloud whose maximum depth equals floor((n - p + 2) / 2). p = 2 gives the
/// square; p = 3 gives a stored configuration found by
/// search_bound_attaining(3, ...). Other p throw PreconditionError.
NamedCloud gen_bound_attaining(Index p, std::uint64_t seed = 0);

/// Randomized search for a general-position cloud with n points in R^p whose
/// maximum depth attains the bound: a symmetric seed configuration plus a
/// center, perturbed by small random rational offsets. Returns nullopt when
/// `attempts` tries all fail.
std::optional<NamedCloud> search_bound_attaining(Index p, Index n, std::uint64_t seed, int attempts);

/// Recipes: "square4", "triangle-center", "bound-attaining:p=3",
/// "gaussian:n=20,p=3,seed=7". Unknown recipes throw PreconditionError.
NamedCloud generate(std::string_view recipe);

/// One point per row, comma separated decimal or "a/b" literals. With
/// `header`, the first line is skipped. Throws IoError naming the row on
/// ragged or malformed input and PreconditionError when n <= p.
NamedCloud load_csv(const std::filesystem::path& path, bool header = false);

/// Exact coordinates, one row per point.
void save_csv(const PointCloud& cloud, const std::filesystem::path& path);

/// Writes `contents` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string csv_text(const PointCloud& cloud);

}  // namespace tukey
