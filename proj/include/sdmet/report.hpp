#ifndef SDMET_REPORT_HPP
#define SDMET_REPORT_HPP

#include <string>
#include <vector>

#include "sdmet/equivalence.hpp"

namespace sdmet {

inline constexpr const char* kToolVersion = "0.1.0";

/// Shortest 17-significant-digit decimal form: round-trips the double
/// bit-faithfully and keeps report bytes stable for a fixed seed.
std::string format_double17(double v);

/// Serialize a campaign report. Keys are emitted in sorted order and numbers
/// through format_double17, so equal reports serialize to equal bytes.
std::string report_to_json(const VerificationReport& report, const std::string& command_echo);

/// Write via a temporary file in the same directory plus rename, so readers
/// never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

enum class DumpField { V, F, ConformalFactor, DetPhi };
enum class DumpChart { HalfPlane, Cylinder };

const char* dump_field_name(DumpField f);
DumpField parse_dump_field(const std::string& name);

/// Grid over [x1_range] x [x2_range] (or (r, z) ranges on the cylinder
/// chart). Fields V and f exist on both charts; conformal_factor and det_phi
/// are half-plane only. Cells that hit a singular point are written as nan,
/// never as a fabricated value.
struct FieldGrid {
  DumpField field = DumpField::V;
  DumpChart chart = DumpChart::HalfPlane;
  int nx = 50;
  int ny = 50;
  std::array<double, 2> x1_range{-5.0, 5.0};
  std::array<double, 2> x2_range{0.05, 10.0};
};

/// CSV text: a # header naming the field and configuration, a column header,
/// then nx*ny data rows.
std::string dump_field_csv(const MonopoleConfig& cfg, const FieldGrid& grid);

/// Same grid as a JSON document (columns + row-major values).
std::string dump_field_json(const MonopoleConfig& cfg, const FieldGrid& grid);

}  // namespace sdmet

#endif  // SDMET_REPORT_HPP
