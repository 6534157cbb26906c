#ifndef SDMET_JOYCE_HPP
#define SDMET_JOYCE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdmet/chart.hpp"
#include "sdmet/jet.hpp"

namespace sdmet {

/// A boundary point of hyperbolic 2-space in R u {infinity}. Infinity and 0
/// are distinct markers rather than sentinel floats because their u-vector
/// formulas are special-cased.
class BoundaryPoint {
 public:
  enum class Kind { Infinity, Zero, Finite };

  static BoundaryPoint infinity() { return BoundaryPoint(Kind::Infinity, 0.0); }
  static BoundaryPoint zero() { return BoundaryPoint(Kind::Zero, 0.0); }
  static BoundaryPoint finite(double q) { return BoundaryPoint(Kind::Finite, q); }

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  double value() const;  // finite points only

 private:
  BoundaryPoint(Kind k, double q) : kind_(k), q_(q) {}
  Kind kind_;
  double q_;
};

/// Ordered coprime integer pairs (m_alpha, n_alpha) attached to the invariant
/// 2-spheres of the torus action. Valid data satisfy
///   (m_1,n_1) = (0,1), (m_k,n_k) = (1,0),
///   m_a n_{a+1} - m_{a+1} n_a = -1, and m_a > 0, n_a > 0 in between.
struct StabilizerData {
  std::vector<std::pair<int, int>> pairs;

  int k() const { return static_cast<int>(pairs.size()); }
};

/// Check the normalization conditions; returns an empty list when the data
/// are valid, otherwise one message per violation.
std::vector<std::string> validate_stabilizer(const StabilizerData& data);

/// Canonical stabilizer data of the semi-free circle action on n # CP^2:
/// (0,1) followed by (1, k - alpha) for alpha = 2..k, k = n + 2.
StabilizerData semifree_data(int n);

struct SemifreeResult {
  bool semifree = false;
  /// The circle subgroup G(m,n) witnessing semi-freeness, when it exists:
  /// (0,1) when all middle pairs have m = 1, (1,0) when all have n = 1.
  std::optional<std::pair<int, int>> witness;
};

/// Classify validated stabilizer data. Throws InvalidData when validation
/// fails.
SemifreeResult is_semifree(const StabilizerData& data);

/// Stabilizer data plus boundary points q_1 = infinity > q_2 = 0 > q_3 > ...
/// (strictly descending, so the finite tail is negative).
class JoyceConfig {
 public:
  JoyceConfig(StabilizerData stab, std::vector<BoundaryPoint> boundary);

  const StabilizerData& stab() const { return stab_; }
  const std::vector<BoundaryPoint>& boundary() const { return boundary_; }
  int k() const { return stab_.k(); }

 private:
  StabilizerData stab_;
  std::vector<BoundaryPoint> boundary_;
};

/// The R^2-valued u-function of a boundary point:
///   u^(q)   = (x2/rho, (x1-q)/rho), rho = |(x1,x2) - (q,0)|  (unit vector),
///   u^(0)   = (x2/R, x1/R),
///   u^(inf) = (0, -1).
template <class T>
std::array<T, 2> u_function(const BoundaryPoint& q, const T& x1, const T& x2) {
  if (value_of(x2) <= 0.0) throw DomainError("u_function: x2 must be positive");
  switch (q.kind()) {
    case BoundaryPoint::Kind::Infinity:
      return {T(0.0), T(-1.0)};
    case BoundaryPoint::Kind::Zero: {
      const T big_r = sqrt(x1 * x1 + x2 * x2);
      return {x2 / big_r, x1 / big_r};
    }
    case BoundaryPoint::Kind::Finite:
    default: {
      const T dx = x1 - q.value();
      const T rho = sqrt(dx * dx + x2 * x2);
      return {x2 / rho, dx / rho};
    }
  }
}

/// Columns of the torus-action matrix: a multiplies dy1, b multiplies dy2.
struct PhiMatrix {
  double a1 = 0.0, a2 = 0.0, b1 = 0.0, b2 = 0.0;

  double det() const { return a1 * b2 - a2 * b1; }
};

/// phi from the defining sum over boundary points and stabilizer pairs:
///   phi = sum_{a<k} (u^(q_a) - u^(q_{a+1}))/2 (x) (m_a, n_a)
///       + (u^(q_k) + u^(q_1))/2 (x) (m_k, n_k).
template <class T>
std::array<T, 4> phi_general_components(const JoyceConfig& cfg, const T& x1, const T& x2) {
  const int k = cfg.k();
  std::vector<std::array<T, 2>> u;
  u.reserve(static_cast<std::size_t>(k));
  for (const BoundaryPoint& q : cfg.boundary()) u.push_back(u_function(q, x1, x2));

  T a1(0.0), a2(0.0), b1(0.0), b2(0.0);
  for (int a = 0; a < k; ++a) {
    const bool last = (a == k - 1);
    const T w1 = last ? (u[a][0] + u[0][0]) * 0.5 : (u[a][0] - u[a + 1][0]) * 0.5;
    const T w2 = last ? (u[a][1] + u[0][1]) * 0.5 : (u[a][1] - u[a + 1][1]) * 0.5;
    const auto [m, n] = cfg.stab().pairs[static_cast<std::size_t>(a)];
    a1 = a1 + w1 * static_cast<double>(m);
    a2 = a2 + w2 * static_cast<double>(m);
    b1 = b1 + w1 * static_cast<double>(n);
    b2 = b2 + w2 * static_cast<double>(n);
  }
  return {a1, a2, b1, b2};
}

/// Closed form of phi for canonical semi-free data:
///   a = (x2/(2R), (x1/R - 1)/2),
///   b1 = ((k-3) x2/R - sum x2/rho_a) / 2,
///   b2 = ((k-3) x1/R - sum (x1-q_a)/rho_a - 1) / 2.
template <class T>
std::array<T, 4> phi_semifree_components(const JoyceConfig& cfg, const T& x1, const T& x2) {
  if (value_of(x2) <= 0.0) throw DomainError("phi_semifree: x2 must be positive");
  const int k = cfg.k();
  const T big_r = sqrt(x1 * x1 + x2 * x2);
  T s1(0.0), s2(0.0);
  for (int a = 2; a < k; ++a) {
    const double q = cfg.boundary()[static_cast<std::size_t>(a)].value();
    const T dx = x1 - q;
    const T rho = sqrt(dx * dx + x2 * x2);
    s1 = s1 + x2 / rho;
    s2 = s2 + dx / rho;
  }
  const double km3 = static_cast<double>(k - 3);
  const T a1 = x2 / (2.0 * big_r);
  const T a2 = (x1 / big_r - 1.0) * 0.5;
  const T b1 = (km3 * (x2 / big_r) - s1) * 0.5;
  const T b2 = (km3 * (x1 / big_r) - s2 - 1.0) * 0.5;
  return {a1, a2, b1, b2};
}

PhiMatrix phi_general(const JoyceConfig& cfg, double x1, double x2);

/// Requires cfg.stab to equal semifree_data(k - 2); throws InvalidData
/// otherwise.
PhiMatrix phi_semifree(const JoyceConfig& cfg, double x1, double x2);

/// Threshold on |det phi| relative to |a||b| below which the torus action is
/// treated as degenerate (a caller error in-region for valid data).
inline constexpr double kDegenerateDet = 1e-13;

/// Joyce metric on the HalfPlane chart, coordinates (x1, x2, y1, y2):
///   g = g_{H^2} + [ (a1^2+a2^2) dy1^2 + (b1^2+b2^2) dy2^2
///                   - 2 (a1 b1 + a2 b2) dy1 dy2 ] / (det phi)^2.
template <class T>
SymMat4T<T> joyce_components(const JoyceConfig& cfg, const T& x1, const T& x2) {
  const auto [a1, a2, b1, b2] = phi_general_components(cfg, x1, x2);
  const T det = a1 * b2 - a2 * b1;
  const double aa = std::sqrt(value_of(a1) * value_of(a1) + value_of(a2) * value_of(a2));
  const double bb = std::sqrt(value_of(b1) * value_of(b1) + value_of(b2) * value_of(b2));
  if (std::abs(value_of(det)) <= kDegenerateDet * aa * bb)
    throw DegenerateTorusAction("joyce metric: det phi vanishes at the query point");
  const T inv_det2 = 1.0 / (det * det);
  const T inv_x22 = 1.0 / (x2 * x2);
  SymMat4T<T> g{};
  g[0][0] = inv_x22;
  g[1][1] = inv_x22;
  g[2][2] = (a1 * a1 + a2 * a2) * inv_det2;
  g[3][3] = (b1 * b1 + b2 * b2) * inv_det2;
  g[2][3] = -(a1 * b1 + a2 * b2) * inv_det2;
  g[3][2] = g[2][3];
  return g;
}

MetricTensor metric_joyce(const JoyceConfig& cfg, const ChartPoint& p);

MetricField joyce_field(const JoyceConfig& cfg);

/// Text format "m,n;m,n;..." used by the CLI.
StabilizerData parse_stabilizer(const std::string& text);
std::string format_stabilizer(const StabilizerData& data);

}  // namespace sdmet

#endif  // SDMET_JOYCE_HPP
