// JSON documents for the command-line tool and SVG drawings of planar clouds.
// Every exact value is written as a "num/den" string.
#pragma once

#include "tukey/depth.hpp"
#include "tukey/median.hpp"
#include "tukey/region.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace tukey {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

Json rational_json(const Rational& v);
Json vector_json(const VectorQ& v);
Json decimal_json(const VectorQ& v);

/// Closed halfspaces as {normal, offset, cut_off} meaning normal . x >= offset.
Json halfspaces_json(const std::vector<Halfspace>& halfspaces);

Json depth_json(const PointCloud& cloud, const VectorQ& x, const DepthResult& result);
Json region_json(const PointCloud& cloud, const DepthRegion& region);
Json median_json(const PointCloud& cloud, const MedianResult& result);
Json report_json(const VerificationReport& report);

/// Deterministic text: two-space indent, trailing newline.
std::string dump(const Json& doc);

/// Writes JSON atomically to `path`.
void save_json(const Json& doc, const std::filesystem::path& path);

/// Planar clouds only: the sample, an optional region polygon and an optional
/// marked point. Throws PreconditionError for p != 2.
std::string svg_plot(const PointCloud& cloud, const DepthRegion* region, const std::optional<VectorQ>& marker);

}  // namespace tukey
