// tukey: depth, depth regions and the Tukey median from the command line.
//
// Exit codes: 0 success, 1 file errors, 2 invalid input or arguments,
// 3 a verification check failed, 4 internal error.
#include "tukey/datasets.hpp"
#include "tukey/median.hpp"
#include "tukey/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace tukey;

enum Exit { ok = 0, io_failure = 1, bad_input = 2, check_failed = 3, internal = 4 };

struct Input {
  std::string in;
  std::string gen;
  bool header = false;
  bool force = false;
};

struct Output {
  std::string out;
  std::string format = "json";
  std::string svg;
};

void add_input(CLI::App* cmd, Input& input) {
  auto* in = cmd->add_option("--in", input.in, "CSV file, one point per row");
  auto* gen = cmd->add_option("--gen", input.gen, "generator recipe, e.g. square4 or gaussian:n=20,p=3,seed=7");
  in->excludes(gen);
  cmd->add_flag("--header", input.header, "skip the first CSV line");
  cmd->add_flag("--force", input.force, "compute on data that is not in general position");
}

NamedCloud load(const Input& input) {
  if (input.in.empty() == input.gen.empty()) throw PreconditionError("exactly one of --in and --gen is required");
  return input.in.empty() ? generate(input.gen) : load_csv(input.in, input.header);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) std::cout << text << std::flush;
  else write_file_atomic(path, text);
}

VectorQ parse_point(const std::string& text, Index p) {
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      values.push_back(parse_rational(field));
    } catch (const std::exception&) {
      throw PreconditionError("--point: not a number: '" + field + "'");
    }
  }
  if (static_cast<Index>(values.size()) != p)
    throw PreconditionError("--point has " + std::to_string(values.size()) + " coordinates, the data has p=" +
                            std::to_string(p));
  VectorQ x(p);
  for (Index i = 0; i < p; ++i) x[i] = values[static_cast<std::size_t>(i)];
  return x;
}

// JSON (or SVG, p = 2 only) to --out or stdout, plus an optional SVG file.
void finish(const Json& doc, const PointCloud& cloud, const DepthRegion* region, const std::optional<VectorQ>& marker,
            const Output& output) {
  if (output.format == "svg") {
    emit(svg_plot(cloud, region, marker), output.out);
    return;
  }
  if (!output.svg.empty()) {
    if (cloud.dim() == 2) write_file_atomic(output.svg, svg_plot(cloud, region, marker));
    else std::cerr << "note: not plottable: SVG output needs p = 2 (p = " << cloud.dim() << ")\n";
  }
  emit(dump(doc), output.out);
}

void check_svg_request(const Output& output, const PointCloud& cloud) {
  if (output.format == "svg" && cloud.dim() != 2)
    throw PreconditionError("not plottable: SVG output needs p = 2 (p = " + std::to_string(cloud.dim()) + ")");
}

int run_depth(const Input& input, const std::string& point, const Output& output) {
  const NamedCloud nc = load(input);
  const VectorQ x = parse_point(point, nc.cloud.dim());
  DepthOptions opts;
  opts.force = input.force;
  const DepthResult r = tukey_depth(x, nc.cloud, opts);
  emit(dump(depth_json(nc.cloud, x, r)), output.out);
  return ok;
}

int run_median(const Input& input, const std::string& strategy, bool binary, const Output& output) {
  const NamedCloud nc = load(input);
  check_svg_request(output, nc.cloud);
  MedianOptions opts;
  opts.strategy = parse_strategy(strategy);
  opts.search = binary ? Search::binary : Search::descending;
  opts.force = input.force;
  const MedianResult r = tukey_median(nc.cloud, opts);
  finish(median_json(nc.cloud, r), nc.cloud, &r.region, r.median, output);
  return ok;
}

int run_region(const Input& input, Index kappa, const Output& output) {
  const NamedCloud nc = load(input);
  check_svg_request(output, nc.cloud);
  RegionOptions opts;
  opts.force = input.force;
  const DepthRegion region = depth_region(nc.cloud, kappa, opts);
  std::optional<VectorQ> marker;
  if (!region.empty()) marker = region_centroid(region);
  finish(region_json(nc.cloud, region), nc.cloud, &region, marker, output);
  return ok;
}

int run_verify(const Input& input, const std::string& suite, const Output& output) {
  static const std::vector<std::string> suites{"thm1", "thm2", "thm3", "prop1", "all"};
  if (std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw PreconditionError("unknown suite '" + suite + "' (expected thm1, thm2, thm3, prop1 or all)");
  const NamedCloud nc = load(input);
  const Index n = nc.cloud.size();
  const Index p = nc.cloud.dim();
  if (suite == "prop1" && p < 3) throw PreconditionError("suite prop1 needs p >= 3 (p = " + std::to_string(p) + ")");

  MedianOptions opts;
  opts.force = input.force;
  const MedianResult r = tukey_median(nc.cloud, opts);

  std::vector<VerificationReport> reports;
  const bool all = suite == "all";
  if (all || suite == "thm1") reports.push_back(verify_theorem1(r, n, p));
  if (all || suite == "thm2") reports.push_back(verify_theorem2(r, nc.cloud));
  if (all || suite == "thm3") reports.push_back(verify_theorem3(r, n, p));
  if (all || suite == "prop1") {
    if (p >= 3) {
      reports.push_back(verify_prop1(nc.cloud, r));
    } else {
      VerificationReport na;
      na.name = "prop1";
      na.applicable = false;
      na.messages.push_back("not applicable: needs p >= 3");
      reports.push_back(na);
    }
  }

  bool passed = true;
  Json list = Json::array();
  for (const auto& rep : reports) {
    passed = passed && rep.passed;
    list.push_back(report_json(rep));
  }
  const Json doc{{"schema_version", schema_version},
                 {"n", n},
                 {"p", p},
                 {"kappa_star", r.kappa_star},
                 {"degenerate", r.degenerate},
                 {"passed", passed},
                 {"suites", list}};
  emit(dump(doc), output.out);
  return passed ? ok : check_failed;
}

std::string percent(const Rational& v) { return to_decimal_string(v * 100, 4); }

int run_bench(Index n, Index p, Index reps, std::uint64_t seed, const Output& output) {
  if (reps < 1) throw PreconditionError("--reps must be at least 1");
  const DepthBounds b = depth_bounds(n, p);
  const Index len_dg92 = b.kappa_hi_dg92 - b.kappa_lo;
  const Index len_thm1 = b.kappa_hi_thm1 - b.kappa_lo;
  const Rational interval_reduction = len_dg92 == 0 ? Rational(0) : Rational(len_dg92 - len_thm1, len_dg92);
  const Rational level_reduction = Rational(len_dg92 - len_thm1, len_dg92 + 1);

  Json rows = Json::array();
  Index total_dg92 = 0;
  Index total_thm1 = 0;
  bool thm1_never_worse = true;
  for (Index rep = 0; rep < reps; ++rep) {
    const NamedCloud nc = gen_gaussian(n, p, seed + static_cast<std::uint64_t>(rep));
    const RegionBuilder builder(nc.cloud);
    MedianOptions o;
    o.strategy = Strategy::dg92;
    const MaxDepth dg = max_depth(builder, o);
    o.strategy = Strategy::thm1;
    const MaxDepth th = max_depth(builder, o);
    if (dg.kappa_star != th.kappa_star) throw std::logic_error("strategies disagree on kappa*");
    thm1_never_worse = thm1_never_worse && th.regions_computed <= dg.regions_computed;
    total_dg92 += dg.regions_computed;
    total_thm1 += th.regions_computed;
    rows.push_back(Json{{"seed", seed + static_cast<std::uint64_t>(rep)},
                        {"kappa_star", th.kappa_star},
                        {"regions_computed", Json{{"dg92", dg.regions_computed}, {"thm1", th.regions_computed}}}});
  }
  const Rational effort_reduction = Rational(total_dg92 - total_thm1, total_dg92);
  const Json doc{
      {"schema_version", schema_version},
      {"n", n},
      {"p", p},
      {"reps", reps},
      {"bounds", Json{{"lo", b.kappa_lo}, {"dg92", b.kappa_hi_dg92}, {"thm1", b.kappa_hi_thm1}, {"fulldim", b.kappa_hi_fulldim}}},
      {"interval_length", Json{{"dg92", len_dg92}, {"thm1", len_thm1}}},
      {"interval_length_reduction", Json{{"exact", to_fraction_string(interval_reduction)}, {"percent", percent(interval_reduction)}}},
      {"level_count", Json{{"dg92", len_dg92 + 1}, {"thm1", len_thm1 + 1}}},
      {"level_count_reduction", Json{{"exact", to_fraction_string(level_reduction)}, {"percent", percent(level_reduction)}}},
      {"regions_computed_total", Json{{"dg92", total_dg92}, {"thm1", total_thm1}}},
      {"regions_computed_reduction", Json{{"exact", to_fraction_string(effort_reduction)}, {"percent", percent(effort_reduction)}}},
      {"thm1_never_more_regions", thm1_never_worse},
      {"runs", rows}};
  emit(dump(doc), output.out);
  return ok;
}

int run_gen(const std::string& recipe, const std::string& out) {
  const NamedCloud nc = generate(recipe);
  emit(csv_text(nc.cloud), out);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Tukey depth, depth regions and Tukey median"};
  app.require_subcommand(1);

  Input input;
  Output output;
  std::string point;
  std::string strategy = "thm1";
  std::string suite = "all";
  std::string recipe;
  bool binary = false;
  Index kappa = 0;
  Index n = 0;
  Index p = 0;
  Index reps = 1;
  std::uint64_t seed = 0;

  const auto add_output = [&](CLI::App* cmd, bool plots) {
    cmd->add_option("--out", output.out, "write the result here instead of stdout");
    if (plots) {
      cmd->add_option("--format", output.format, "json or svg (p = 2)")->check(CLI::IsMember({"json", "svg"}));
      cmd->add_option("--svg", output.svg, "also write an SVG plot (p = 2)");
    }
  };

  auto* depth = app.add_subcommand("depth", "depth of one point");
  add_input(depth, input);
  depth->add_option("--point", point, "comma separated coordinates")->required();
  add_output(depth, false);

  auto* median = app.add_subcommand("median", "maximum depth, median region and Tukey median");
  add_input(median, input);
  median->add_option("--strategy", strategy, "upper bound the search starts from: dg92 or thm1");
  median->add_flag("--binary", binary, "binary search over levels instead of a descending scan");
  add_output(median, true);

  auto* region = app.add_subcommand("region", "depth region at one level");
  add_input(region, input);
  region->add_option("--kappa", kappa, "depth level as a count, 1..n")->required();
  add_output(region, true);

  auto* verify = app.add_subcommand("verify", "check the depth bounds on a cloud");
  add_input(verify, input);
  verify->add_option("--suite", suite, "thm1, thm2, thm3, prop1 or all");
  add_output(verify, false);

  auto* bench = app.add_subcommand("bench", "search effort of the two upper bounds on Gaussian clouds");
  bench->add_option("--n", n, "points per cloud")->required();
  bench->add_option("--p", p, "dimension")->required();
  bench->add_option("--reps", reps, "number of clouds");
  bench->add_option("--seed", seed, "seed of the first cloud");
  add_output(bench, false);

  auto* gen = app.add_subcommand("gen", "write a generated cloud as CSV");
  gen->add_option("--recipe", recipe, "generator recipe")->required();
  gen->add_option("--out", output.out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (depth->parsed()) return run_depth(input, point, output);
    if (median->parsed()) return run_median(input, strategy, binary, output);
    if (region->parsed()) return run_region(input, kappa, output);
    if (verify->parsed()) return run_verify(input, suite, output);
    if (bench->parsed()) return run_bench(n, p, reps, seed, output);
    if (gen->parsed()) return run_gen(recipe, output.out);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return io_failure;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return bad_input;
}
