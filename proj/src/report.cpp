#include "sdmet/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sdmet {

std::string format_double17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string json_number(double v) {
  // JSON has no NaN literal; dumps use null for excluded cells
  if (std::isnan(v) || std::isinf(v)) return "null";
  return format_double17(v);
}

std::string json_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += json_number(v[i]);
  }
  out += "]";
  return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& report, const std::string& command_echo) {
  // keys emitted in sorted order, by hand
  std::ostringstream out;
  out << "{";
  out << "\"checks\":[";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckResult& c = report.checks[i];
    if (i) out << ",";
    out << "{\"max_residual\":" << json_number(c.max_residual)
        << ",\"mean_residual\":" << json_number(c.mean_residual)
        << ",\"name\":" << json_string(c.name) << ",\"pass\":" << (c.pass ? "true" : "false")
        << ",\"samples\":" << c.samples << ",\"tolerance\":" << json_number(c.tolerance)
        << "}";
  }
  out << "],";
  out << "\"command\":" << json_string(command_echo) << ",";
  out << "\"config\":{";
  out << "\"exclusion_radius\":" << json_number(report.spec.exclusion_radius);
  out << ",\"heights\":" << json_array(report.heights);
  out << ",\"samples\":" << report.spec.count;
  out << ",\"seed\":" << report.spec.seed;
  out << ",\"x1_range\":[" << json_number(report.spec.x1_range[0]) << ","
      << json_number(report.spec.x1_range[1]) << "]";
  out << ",\"x2_range\":[" << json_number(report.spec.x2_range[0]) << ","
      << json_number(report.spec.x2_range[1]) << "]";
  out << "},";
  out << "\"overall_pass\":" << (report.overall_pass ? "true" : "false") << ",";
  out << "\"tool_version\":" << json_string(kToolVersion);
  out << "}\n";
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ArgumentError("cannot open " + tmp.string() + " for writing");
    f << content;
    if (!f) throw ArgumentError("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

const char* dump_field_name(DumpField f) {
  switch (f) {
    case DumpField::V: return "V";
    case DumpField::F: return "f";
    case DumpField::ConformalFactor: return "conformal_factor";
    case DumpField::DetPhi: return "det_phi";
  }
  return "?";
}

DumpField parse_dump_field(const std::string& name) {
  for (DumpField f :
       {DumpField::V, DumpField::F, DumpField::ConformalFactor, DumpField::DetPhi})
    if (name == dump_field_name(f)) return f;
  throw ArgumentError("unknown field \"" + name + "\"");
}

namespace {

struct GridEval {
  std::string col1, col2;
  std::function<double(double, double)> value;  // NaN marks excluded cells
};

GridEval make_eval(const MonopoleConfig& cfg, const FieldGrid& grid) {
  const bool halfplane = grid.chart == DumpChart::HalfPlane;
  if (!halfplane &&
      (grid.field == DumpField::ConformalFactor || grid.field == DumpField::DetPhi))
    throw ArgumentError("field is defined on the half-plane chart only");

  GridEval ev;
  ev.col1 = halfplane ? "x1" : "r";
  ev.col2 = halfplane ? "x2" : "z";

  auto guard = [](auto&& fn) {
    return [fn](double a, double b) -> double {
      try {
        return fn(a, b);
      } catch (const SingularPoint&) {
        return std::nan("");
      } catch (const DomainError&) {
        return std::nan("");
      }
    };
  };

  switch (grid.field) {
    case DumpField::V:
      if (halfplane)
        ev.value = guard([cfg](double a, double b) { return potential_v_halfplane(cfg, a, b); });
      else
        ev.value = guard([cfg](double a, double b) { return potential_v(cfg, a, b); });
      break;
    case DumpField::F:
      if (halfplane)
        ev.value = guard([cfg](double a, double b) { return flux_f_halfplane(cfg, a, b); });
      else
        ev.value = guard([cfg](double a, double b) { return flux_f(cfg, a, b); });
      break;
    case DumpField::ConformalFactor:
      ev.value = guard([cfg](double a, double b) {
        return conformal_factor(cfg, ChartPoint::halfplane(a, b, 0.0, 0.0));
      });
      break;
    case DumpField::DetPhi: {
      const Identification id{cfg};  // requires n >= 1
      ev.value = guard([id](double a, double b) { return phi_general(id.joyce(), a, b).det(); });
      break;
    }
  }
  return ev;
}

std::string heights_csv(const MonopoleConfig& cfg) {
  if (cfg.n() == 0) return "none";
  std::string s;
  for (int i = 0; i < cfg.n(); ++i) {
    if (i) s += ",";
    s += format_double17(cfg.heights()[static_cast<std::size_t>(i)]);
  }
  return s;
}

}  // namespace

std::string dump_field_csv(const MonopoleConfig& cfg, const FieldGrid& grid) {
  if (grid.nx < 2 || grid.ny < 2) throw ArgumentError("grid dimensions must be >= 2");
  const GridEval ev = make_eval(cfg, grid);
  std::ostringstream out;
  out << "# sdmet " << kToolVersion << " field=" << dump_field_name(grid.field)
      << " chart=" << (grid.chart == DumpChart::HalfPlane ? "halfplane" : "cylinder")
      << " heights=" << heights_csv(cfg) << " grid=" << grid.nx << "x" << grid.ny << " "
      << ev.col1 << "=[" << format_double17(grid.x1_range[0]) << ","
      << format_double17(grid.x1_range[1]) << "] " << ev.col2 << "=["
      << format_double17(grid.x2_range[0]) << "," << format_double17(grid.x2_range[1])
      << "]\n";
  out << ev.col1 << "," << ev.col2 << ",value\n";
  for (int j = 0; j < grid.ny; ++j) {
    const double b = grid.x2_range[0] + (grid.x2_range[1] - grid.x2_range[0]) * j /
                                            static_cast<double>(grid.ny - 1);
    for (int i = 0; i < grid.nx; ++i) {
      const double a = grid.x1_range[0] + (grid.x1_range[1] - grid.x1_range[0]) * i /
                                              static_cast<double>(grid.nx - 1);
      out << format_double17(a) << "," << format_double17(b) << ","
          << format_double17(ev.value(a, b)) << "\n";
    }
  }
  return out.str();
}

std::string dump_field_json(const MonopoleConfig& cfg, const FieldGrid& grid) {
  if (grid.nx < 2 || grid.ny < 2) throw ArgumentError("grid dimensions must be >= 2");
  const GridEval ev = make_eval(cfg, grid);
  std::ostringstream out;
  out << "{\"chart\":" << json_string(grid.chart == DumpChart::HalfPlane ? "halfplane"
                                                                         : "cylinder")
      << ",\"columns\":[" << json_string(ev.col1) << "," << json_string(ev.col2)
      << ",\"value\"]"
      << ",\"field\":" << json_string(dump_field_name(grid.field)) << ",\"heights\":"
      << json_array(cfg.heights()) << ",\"nx\":" << grid.nx << ",\"ny\":" << grid.ny
      << ",\"rows\":[";
  bool first = true;
  for (int j = 0; j < grid.ny; ++j) {
    const double b = grid.x2_range[0] + (grid.x2_range[1] - grid.x2_range[0]) * j /
                                            static_cast<double>(grid.ny - 1);
    for (int i = 0; i < grid.nx; ++i) {
      const double a = grid.x1_range[0] + (grid.x1_range[1] - grid.x1_range[0]) * i /
                                              static_cast<double>(grid.nx - 1);
      if (!first) out << ",";
      first = false;
      out << "[" << json_number(a) << "," << json_number(b) << ","
          << json_number(ev.value(a, b)) << "]";
    }
  }
  out << "],\"tool_version\":" << json_string(kToolVersion) << "}\n";
  return out.str();
}

}  // namespace sdmet
