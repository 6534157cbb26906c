// Command-line front end: verification campaigns, pointwise metric and
// curvature evaluation, field dumps for external plotting, and stabilizer
// data tooling. Exit codes: 0 success/pass, 1 verification or validation
// failure, 2 usage or domain errors.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdmet/curvature.hpp"
#include "sdmet/equivalence.hpp"
#include "sdmet/joyce.hpp"
#include "sdmet/lebrun.hpp"
#include "sdmet/monopole.hpp"
#include "sdmet/report.hpp"

namespace {

using namespace sdmet;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_double17(v[i]);
  }
  return s;
}

MonopoleConfig make_config(const std::vector<double>& heights) {
  return MonopoleConfig(heights);  // throws ArgumentError when not increasing
}

ChartPoint make_point(const std::string& metric, const std::vector<double>& coords) {
  if (coords.size() != 4) throw ArgumentError("--point needs exactly 4 coordinates");
  if (metric == "lebrun-cyl") return ChartPoint::cyl(coords[0], coords[1], coords[2], coords[3]);
  return ChartPoint::halfplane(coords[0], coords[1], coords[2], coords[3]);
}

struct MetricChoice {
  MetricTensor tensor;
  MetricField field;
};

MetricChoice make_metric(const std::string& metric, const MonopoleConfig& cfg,
                         const ChartPoint& p) {
  if (metric == "lebrun-cyl") return {metric_glb(cfg, p), lebrun_full_field(cfg)};
  if (metric == "lebrun-tilde") return {metric_gtilde(cfg, p), lebrun_tilde_field(cfg)};
  if (metric == "joyce") {
    const Identification id(cfg);  // rejects n = 0
    return {metric_joyce(id.joyce(), p), joyce_field(id.joyce())};
  }
  throw ArgumentError("unknown metric \"" + metric + "\"");
}

void print_components(const std::string& metric, const std::vector<double>& heights,
                      const std::vector<double>& coords, const MetricTensor& g) {
  std::string out = "{\"components\":{";
  bool first = true;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      if (!first) out += ",";
      first = false;
      out += "\"g" + std::to_string(i) + std::to_string(j) +
             "\":" + format_double17(g.g[i][j]);
    }
  out += "},\"heights\":[" + join_doubles(heights) + "],\"metric\":\"" + metric +
         "\",\"point\":[" + join_doubles(coords) + "]}";
  std::cout << out << "\n";
}

int cmd_verify(const std::vector<double>& heights, int samples, std::uint64_t seed,
               const std::vector<std::string>& check_names, const std::string& out_path,
               const CampaignTolerances& tol, SampleSpec spec) {
  const Identification id(make_config(heights));
  spec.count = samples;
  spec.seed = seed;

  std::vector<Check> checks;
  for (const std::string& name : check_names) checks.push_back(parse_check(name));

  const VerificationReport report = run_campaign(id, spec, checks, tol);

  std::string echo = "verify --heights " + join_doubles(heights) + " --samples " +
                     std::to_string(samples) + " --seed " + std::to_string(seed) +
                     " --checks ";
  for (std::size_t i = 0; i < check_names.size(); ++i)
    echo += (i ? "," : "") + check_names[i];

  for (const CheckResult& c : report.checks)
    std::printf("%-12s %s  samples=%ld  max=%.3e  mean=%.3e  tol=%.0e\n", c.name.c_str(),
                c.pass ? "PASS" : "FAIL", c.samples, c.max_residual, c.mean_residual,
                c.tolerance);
  std::printf("overall: %s\n", report.overall_pass ? "PASS" : "FAIL");

  if (!out_path.empty()) write_file_atomic(out_path, report_to_json(report, echo));
  return report.overall_pass ? kExitPass : kExitFail;
}

int cmd_eval(const std::string& metric, const std::vector<double>& heights,
             const std::vector<double>& coords) {
  const MonopoleConfig cfg = make_config(heights);
  const ChartPoint p = make_point(metric, coords);
  const MetricChoice m = make_metric(metric, cfg, p);
  print_components(metric, heights, coords, m.tensor);
  return kExitPass;
}

int cmd_curvature(const std::string& metric, const std::vector<double>& heights,
                  const std::vector<double>& coords) {
  const MonopoleConfig cfg = make_config(heights);
  const ChartPoint p = make_point(metric, coords);
  const MetricChoice m = make_metric(metric, cfg, p);

  const CurvatureBundle bundle = curvature(m.field, p);
  const Mat4 g_inv = invert_sym4(m.tensor.g);
  const AsdRatio asd = asd_ratio(m.field, p);

  std::cout << "{\"heights\":[" << join_doubles(heights) << "],\"metric\":\"" << metric
            << "\",\"negligible_weyl\":" << (asd.negligible_weyl ? "true" : "false")
            << ",\"point\":[" << join_doubles(coords) << "]"
            << ",\"ratio_minus\":" << format_double17(asd.ratio_minus)
            << ",\"ratio_plus\":" << format_double17(asd.ratio_plus)
            << ",\"ricci_norm\":" << format_double17(tensor_norm2(bundle.ricci, g_inv))
            << ",\"scalar\":" << format_double17(bundle.scalar)
            << ",\"weyl_norm\":" << format_double17(tensor_norm4(bundle.weyl, g_inv)) << "}\n";
  return kExitPass;
}

int cmd_dump_field(const std::string& field_name, const std::string& chart_name,
                   const std::vector<double>& heights, const std::vector<int>& grid_dims,
                   const std::vector<double>& x1_range, const std::vector<double>& x2_range,
                   const std::string& out_path, const std::string& format) {
  const MonopoleConfig cfg = make_config(heights);
  FieldGrid grid;
  grid.field = parse_dump_field(field_name);
  if (chart_name == "halfplane")
    grid.chart = DumpChart::HalfPlane;
  else if (chart_name == "cylinder")
    grid.chart = DumpChart::Cylinder;
  else
    throw ArgumentError("unknown chart \"" + chart_name + "\"");
  if (grid_dims.size() != 2) throw ArgumentError("--grid needs nx,ny");
  grid.nx = grid_dims[0];
  grid.ny = grid_dims[1];
  if (x1_range.size() != 2 || x2_range.size() != 2)
    throw ArgumentError("ranges need exactly two values");
  grid.x1_range = {x1_range[0], x1_range[1]};
  grid.x2_range = {x2_range[0], x2_range[1]};

  std::string content;
  if (format == "csv")
    content = dump_field_csv(cfg, grid);
  else if (format == "json")
    content = dump_field_json(cfg, grid);
  else
    throw ArgumentError("unknown format \"" + format + "\"");
  write_file_atomic(out_path, content);
  std::cout << "wrote " << out_path << " (" << grid.nx * grid.ny << " cells)\n";
  return kExitPass;
}

int cmd_joyce_validate(const std::string& data_text) {
  const StabilizerData data = parse_stabilizer(data_text);  // throws -> usage error
  const auto violations = validate_stabilizer(data);
  if (!violations.empty()) {
    std::cout << "invalid stabilizer data:\n";
    for (const std::string& v : violations) std::cout << "  - " << v << "\n";
    return kExitFail;
  }
  const SemifreeResult res = is_semifree(data);
  std::cout << "valid stabilizer data: " << format_stabilizer(data) << "\n";
  if (res.semifree)
    std::cout << "semi-free: yes, witness G(" << res.witness->first << ","
              << res.witness->second << ")\n";
  else
    std::cout << "semi-free: no\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sdmet: toric LeBrun / Joyce metric toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("sdmet ") + kToolVersion);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  std::vector<double> heights;
  int samples = 500;
  std::uint64_t seed = 1;
  std::vector<std::string> checks = {"lemma",       "theorem", "connection",
                                     "scalar_flat", "asd",     "cross_chart"};
  std::string out_path;
  CampaignTolerances tol;
  SampleSpec spec;
  std::vector<double> x1_range = {spec.x1_range[0], spec.x1_range[1]};
  std::vector<double> x2_range = {spec.x2_range[0], spec.x2_range[1]};
  verify->add_option("--heights", heights, "monopole heights, increasing")
      ->delimiter(',')
      ->required();
  verify->add_option("--samples", samples, "sample count");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--checks", checks, "subset of lemma,theorem,connection,scalar_flat,asd,cross_chart")
      ->delimiter(',');
  verify->add_option("--out", out_path, "report JSON path");
  verify->add_option("--x1-range", x1_range, "x1 sampling range")->delimiter(',');
  verify->add_option("--x2-range", x2_range, "x2 sampling range")->delimiter(',');
  verify->add_option("--exclusion", spec.exclusion_radius,
                     "hyperbolic exclusion radius around monopole points");
  verify->add_option("--tol-lemma", tol.lemma, "");
  verify->add_option("--tol-theorem", tol.theorem, "");
  verify->add_option("--tol-connection", tol.connection, "");
  verify->add_option("--tol-scalar-flat", tol.scalar_flat, "");
  verify->add_option("--tol-asd", tol.asd, "");
  verify->add_option("--tol-cross-chart", tol.cross_chart, "");

  // eval / curvature
  auto* eval = app.add_subcommand("eval", "evaluate metric components at a point");
  auto* curv = app.add_subcommand("curvature", "curvature summary at a point");
  std::string metric = "lebrun-cyl";
  std::vector<double> point;
  for (CLI::App* sub : {eval, curv}) {
    sub->add_option("--metric", metric, "lebrun-cyl | lebrun-tilde | joyce")->required();
    sub->add_option("--heights", heights, "monopole heights (may be empty for LeBrun)")
        ->delimiter(',');
    sub->add_option("--point", point, "4 chart coordinates")->delimiter(',')->required();
  }

  // dump-field
  auto* dump = app.add_subcommand("dump-field", "write a field grid for plotting");
  std::string field_name = "V", chart_name = "halfplane", format = "csv";
  std::vector<int> grid_dims = {50, 50};
  std::vector<double> d_x1_range = {-5.0, 5.0}, d_x2_range = {0.05, 10.0};
  dump->add_option("--field", field_name, "V | f | conformal_factor | det_phi")->required();
  dump->add_option("--chart", chart_name, "halfplane | cylinder");
  dump->add_option("--heights", heights, "monopole heights")->delimiter(',');
  dump->add_option("--grid", grid_dims, "nx,ny")->delimiter(',');
  dump->add_option("--x1-range", d_x1_range, "first coordinate range")->delimiter(',');
  dump->add_option("--x2-range", d_x2_range, "second coordinate range")->delimiter(',');
  dump->add_option("--out", out_path, "output path")->required();
  dump->add_option("--format", format, "csv | json");

  // joyce-validate
  auto* validate = app.add_subcommand("joyce-validate", "validate stabilizer data");
  std::string data_text;
  validate->add_option("--data", data_text, "pairs \"m,n;m,n;...\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (x1_range.size() != 2 || x2_range.size() != 2)
        throw ArgumentError("ranges need exactly two values");
      spec.x1_range = {x1_range[0], x1_range[1]};
      spec.x2_range = {x2_range[0], x2_range[1]};
      return cmd_verify(heights, samples, seed, checks, out_path, tol, spec);
    }
    if (eval->parsed()) return cmd_eval(metric, heights, point);
    if (curv->parsed()) return cmd_curvature(metric, heights, point);
    if (dump->parsed())
      return cmd_dump_field(field_name, chart_name, heights, grid_dims, d_x1_range,
                            d_x2_range, out_path, format);
    if (validate->parsed()) return cmd_joyce_validate(data_text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
