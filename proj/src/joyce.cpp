#include "sdmet/joyce.hpp"

#include <numeric>
#include <sstream>

namespace sdmet {

double BoundaryPoint::value() const {
  if (kind_ != Kind::Finite)
    throw ArgumentError("BoundaryPoint::value: not a finite boundary point");
  return q_;
}

std::vector<std::string> validate_stabilizer(const StabilizerData& data) {
  std::vector<std::string> violations;
  const int k = data.k();
  if (k < 3) {
    violations.push_back("need at least 3 pairs, got " + std::to_string(k));
    return violations;
  }
  auto pair_str = [&](int a) {
    const auto& [m, n] = data.pairs[static_cast<std::size_t>(a)];
    return "(" + std::to_string(m) + "," + std::to_string(n) + ") at position " +
           std::to_string(a + 1);
  };
  if (data.pairs.front() != std::pair<int, int>{0, 1})
    violations.push_back("first pair must be (0,1), got " + pair_str(0));
  if (data.pairs.back() != std::pair<int, int>{1, 0})
    violations.push_back("last pair must be (1,0), got " + pair_str(k - 1));
  for (int a = 0; a < k; ++a) {
    const auto& [m, n] = data.pairs[static_cast<std::size_t>(a)];
    if (std::gcd(m, n) != 1) violations.push_back("pair not coprime: " + pair_str(a));
    if (a > 0 && a < k - 1 && (m <= 0 || n <= 0))
      violations.push_back("middle pair must have m > 0 and n > 0: " + pair_str(a));
  }
  for (int a = 0; a + 1 < k; ++a) {
    const auto& [m0, n0] = data.pairs[static_cast<std::size_t>(a)];
    const auto& [m1, n1] = data.pairs[static_cast<std::size_t>(a + 1)];
    const long det = static_cast<long>(m0) * n1 - static_cast<long>(m1) * n0;
    if (det != -1)
      violations.push_back("determinant of pairs " + std::to_string(a + 1) + "," +
                           std::to_string(a + 2) + " is " + std::to_string(det) +
                           ", must be -1");
  }
  return violations;
}

StabilizerData semifree_data(int n) {
  if (n < 1) throw ArgumentError("semifree_data: n must be >= 1");
  const int k = n + 2;
  StabilizerData data;
  data.pairs.reserve(static_cast<std::size_t>(k));
  data.pairs.emplace_back(0, 1);
  for (int a = 2; a <= k; ++a) data.pairs.emplace_back(1, k - a);
  return data;
}

SemifreeResult is_semifree(const StabilizerData& data) {
  const auto violations = validate_stabilizer(data);
  if (!violations.empty())
    throw InvalidData("is_semifree: invalid stabilizer data: " + violations.front());
  bool all_m1 = true, all_n1 = true;
  for (int a = 1; a + 1 < data.k(); ++a) {
    const auto& [m, n] = data.pairs[static_cast<std::size_t>(a)];
    all_m1 = all_m1 && (m == 1);
    all_n1 = all_n1 && (n == 1);
  }
  SemifreeResult res;
  if (all_m1) {
    res.semifree = true;
    res.witness = std::pair<int, int>{0, 1};
  } else if (all_n1) {
    res.semifree = true;
    res.witness = std::pair<int, int>{1, 0};
  }
  return res;
}

JoyceConfig::JoyceConfig(StabilizerData stab, std::vector<BoundaryPoint> boundary)
    : stab_(std::move(stab)), boundary_(std::move(boundary)) {
  const auto violations = validate_stabilizer(stab_);
  if (!violations.empty())
    throw InvalidData("JoyceConfig: invalid stabilizer data: " + violations.front());
  if (static_cast<int>(boundary_.size()) != stab_.k())
    throw InvalidData("JoyceConfig: need one boundary point per stabilizer pair");
  if (!boundary_[0].is_infinity())
    throw InvalidData("JoyceConfig: first boundary point must be infinity");
  if (!boundary_[1].is_zero())
    throw InvalidData("JoyceConfig: second boundary point must be 0");
  double prev = 0.0;
  for (std::size_t a = 2; a < boundary_.size(); ++a) {
    if (boundary_[a].kind() != BoundaryPoint::Kind::Finite)
      throw InvalidData("JoyceConfig: boundary points after the second must be finite");
    const double q = boundary_[a].value();
    if (!(q < prev))
      throw InvalidData("JoyceConfig: boundary points must be strictly descending");
    prev = q;
  }
}

PhiMatrix phi_general(const JoyceConfig& cfg, double x1, double x2) {
  const auto [a1, a2, b1, b2] = phi_general_components(cfg, x1, x2);
  return PhiMatrix{a1, a2, b1, b2};
}

PhiMatrix phi_semifree(const JoyceConfig& cfg, double x1, double x2) {
  if (cfg.stab().pairs != semifree_data(cfg.k() - 2).pairs)
    throw InvalidData("phi_semifree: stabilizer data is not the canonical semi-free data");
  const auto [a1, a2, b1, b2] = phi_semifree_components(cfg, x1, x2);
  return PhiMatrix{a1, a2, b1, b2};
}

MetricTensor metric_joyce(const JoyceConfig& cfg, const ChartPoint& p) {
  if (p.chart != Chart::HalfPlane)
    throw DomainError("Joyce metric: HalfPlane chart required");
  const SymMat4T<double> g = joyce_components(cfg, p[0], p[1]);
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = g[i][j];
  return MetricTensor{p, m};
}

MetricField joyce_field(const JoyceConfig& cfg) {
  return MetricField{Chart::HalfPlane,
                     [cfg](const DVec4& x) { return joyce_components(cfg, x[0], x[1]); }};
}

StabilizerData parse_stabilizer(const std::string& text) {
  StabilizerData data;
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos)
      throw ArgumentError("parse_stabilizer: expected \"m,n\" pair, got \"" + item + "\"");
    try {
      std::size_t used1 = 0, used2 = 0;
      const std::string first = item.substr(0, comma), second = item.substr(comma + 1);
      const int m = std::stoi(first, &used1);
      const int n = std::stoi(second, &used2);
      if (used1 != first.size() || used2 != second.size())
        throw ArgumentError("parse_stabilizer: trailing characters in \"" + item + "\"");
      data.pairs.emplace_back(m, n);
    } catch (const std::invalid_argument&) {
      throw ArgumentError("parse_stabilizer: not an integer pair: \"" + item + "\"");
    } catch (const std::out_of_range&) {
      throw ArgumentError("parse_stabilizer: integer out of range: \"" + item + "\"");
    }
  }
  if (data.pairs.empty()) throw ArgumentError("parse_stabilizer: empty data string");
  return data;
}

std::string format_stabilizer(const StabilizerData& data) {
  std::string out;
  for (std::size_t a = 0; a < data.pairs.size(); ++a) {
    if (a) out += ';';
    out += std::to_string(data.pairs[a].first) + ',' + std::to_string(data.pairs[a].second);
  }
  return out;
}

}  // namespace sdmet
