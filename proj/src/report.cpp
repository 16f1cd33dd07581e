#include "tukey/report.hpp"

#include "tukey/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace tukey {
namespace {

std::string status_name(RegionStatus s) {
  switch (s) {
    case RegionStatus::bounded: return "bounded";
    case RegionStatus::empty: return "empty";
    case RegionStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

Json vertices_json(const std::vector<VectorQ>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

Json bounds_json(const DepthBounds& b) {
  return Json{{"lo", b.kappa_lo}, {"dg92", b.kappa_hi_dg92}, {"thm1", b.kappa_hi_thm1}, {"fulldim", b.kappa_hi_fulldim}};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

Json rational_json(const Rational& v) { return to_fraction_string(v); }

Json vector_json(const VectorQ& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_json(v[i]));
  return out;
}

Json decimal_json(const VectorQ& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_decimal_string(v[i]));
  return out;
}

Json halfspaces_json(const std::vector<Halfspace>& halfspaces) {
  Json out = Json::array();
  for (const auto& h : halfspaces) {
    const bool flip = h.side == Side::below;
    out.push_back(Json{{"normal", vector_json(flip ? VectorQ(-h.boundary.normal) : h.boundary.normal)},
                       {"offset", rational_json(flip ? Rational(-h.boundary.offset) : h.boundary.offset)},
                       {"cut_off", h.cut_off}});
  }
  return out;
}

Json depth_json(const PointCloud& cloud, const VectorQ& x, const DepthResult& result) {
  return Json{{"schema_version", schema_version},
              {"n", cloud.size()},
              {"p", cloud.dim()},
              {"point", vector_json(x)},
              {"kappa", result.depth.kappa},
              {"lambda", std::to_string(result.depth.kappa) + "/" + std::to_string(result.depth.n)},
              {"witness_direction", vector_json(result.witness.vector)},
              {"degenerate", result.degenerate}};
}

Json region_json(const PointCloud& cloud, const DepthRegion& region) {
  Json doc{{"schema_version", schema_version},
           {"n", cloud.size()},
           {"p", cloud.dim()},
           {"kappa", region.level_kappa},
           {"status", status_name(region.status)},
           {"dim", region.dim},
           {"vertices", vertices_json(region.vertices)}};
  if (!region.empty()) {
    const VectorQ c = region_centroid(region);
    doc["centroid"] = vector_json(c);
    doc["centroid_decimal"] = decimal_json(c);
  }
  doc["halfspaces"] = halfspaces_json(region.halfspaces);
  doc["certified"] = region.certified;
  doc["degenerate"] = region.degenerate;
  return doc;
}

Json median_json(const PointCloud& cloud, const MedianResult& r) {
  Json sample_is_vertex = Json::array();
  for (const bool b : r.sample_is_vertex) sample_is_vertex.push_back(b);
  return Json{
      {"schema_version", schema_version},
      {"n", cloud.size()},
      {"p", cloud.dim()},
      {"kappa_star", r.kappa_star},
      {"lambda_star", std::to_string(r.kappa_star) + "/" + std::to_string(cloud.size())},
      {"median", vector_json(r.median)},
      {"median_decimal", decimal_json(r.median)},
      {"region",
       Json{{"dim", r.region.dim},
            {"vertices", vertices_json(r.region.vertices)},
            {"halfspaces", halfspaces_json(r.region.halfspaces)}}},
      {"flags",
       Json{{"is_singleton", r.is_singleton},
            {"deepest_samples", r.deepest_sample_indices},
            {"sample_is_vertex", sample_is_vertex},
            {"degenerate", r.degenerate}}},
      {"effort",
       Json{{"strategy", to_string(r.strategy)},
            {"regions_computed", r.regions_computed},
            {"bounds", bounds_json(r.bounds)}}}};
}

Json report_json(const VerificationReport& report) {
  return Json{{"name", report.name},
              {"passed", report.passed},
              {"applicable", report.applicable},
              {"margin", report.margin},
              {"messages", report.messages}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void save_json(const Json& doc, const std::filesystem::path& path) { write_file_atomic(path, dump(doc)); }

std::string svg_plot(const PointCloud& cloud, const DepthRegion* region, const std::optional<VectorQ>& marker) {
  if (cloud.dim() != 2) throw PreconditionError("not plottable: SVG output needs p = 2");
  constexpr double size = 400;
  constexpr double pad = 20;
  const auto to_d = [](const Rational& v) { return v.convert_to<double>(); };

  double lo_x = to_d(cloud.points().row(0).minCoeff());
  double hi_x = to_d(cloud.points().row(0).maxCoeff());
  double lo_y = to_d(cloud.points().row(1).minCoeff());
  double hi_y = to_d(cloud.points().row(1).maxCoeff());
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const auto sx = [&](double x) { return fmt(pad + (x - lo_x) / span * (size - 2 * pad)); };
  const auto sy = [&](double y) { return fmt(size - pad - (y - lo_y) / span * (size - 2 * pad)); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  out += "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  if (region && !region->empty()) {
    // Order the vertices by angle about their average.
    double cx = 0;
    double cy = 0;
    for (const auto& v : region->vertices) {
      cx += to_d(v[0]);
      cy += to_d(v[1]);
    }
    cx /= static_cast<double>(region->vertices.size());
    cy /= static_cast<double>(region->vertices.size());
    std::vector<std::pair<double, std::pair<double, double>>> ring;
    for (const auto& v : region->vertices) {
      const double x = to_d(v[0]);
      const double y = to_d(v[1]);
      ring.push_back({std::atan2(y - cy, x - cx), {x, y}});
    }
    std::sort(ring.begin(), ring.end());
    if (ring.size() == 1) {
      out += "<circle cx=\"" + sx(ring[0].second.first) + "\" cy=\"" + sy(ring[0].second.second) +
             "\" r=\"5\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
    } else {
      out += "<polygon fill=\"lightsteelblue\" fill-opacity=\"0.6\" stroke=\"steelblue\" points=\"";
      for (std::size_t i = 0; i < ring.size(); ++i)
        out += (i ? " " : "") + sx(ring[i].second.first) + "," + sy(ring[i].second.second);
      out += "\"/>\n";
    }
  }
  for (Index j = 0; j < cloud.size(); ++j)
    out += "<circle cx=\"" + sx(to_d(cloud.points()(0, j))) + "\" cy=\"" + sy(to_d(cloud.points()(1, j))) +
           "\" r=\"3\" fill=\"black\"/>\n";
  if (marker) {
    const std::string x = sx(to_d((*marker)[0]));
    const std::string y = sy(to_d((*marker)[1]));
    out += "<path d=\"M" + x + " " + y + " m-5 -5 l10 10 m0 -10 l-10 10\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tukey
