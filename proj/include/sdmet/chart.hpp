#ifndef SDMET_CHART_HPP
#define SDMET_CHART_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace sdmet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A query outside a chart's coordinate domain.
struct DomainError : Error {
  using Error::Error;
};

/// A query at (or numerically on top of) a monopole pole.
struct SingularPoint : Error {
  using Error::Error;
};

/// Invalid caller-supplied configuration (heights, flags, sizes).
struct ArgumentError : Error {
  using Error::Error;
};

/// Structurally invalid stabilizer or boundary data.
struct InvalidData : Error {
  using Error::Error;
};

/// Metric matrix numerically non-invertible at the query point.
struct SingularMetric : Error {
  using Error::Error;
};

/// Torus action degenerate: |det phi| below threshold relative to |a||b|.
struct DegenerateTorusAction : Error {
  using Error::Error;
};

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

template <class T>
using SymMat4T = std::array<std::array<T, 4>, 4>;

/// The two coordinate charts in play.
///   CylLB:     (r, tau, z, theta), r >= 0, z > 0, tau/theta angular.
///   HalfPlane: (x1, x2, y1, y2),  x2 > 0, y1/y2 angular.
enum class Chart { CylLB, HalfPlane };

const char* chart_name(Chart c);

/// A point of one of the two charts. Angular coordinates are reduced to
/// [0, 2*pi) at construction; domain constraints are enforced.
struct ChartPoint {
  Chart chart;
  Vec4 x;

  static ChartPoint cyl(double r, double tau, double z, double theta);
  static ChartPoint halfplane(double x1, double x2, double y1, double y2);

  double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
};

/// Symmetric 4x4 metric components attached to a chart point, in the chart's
/// coordinate basis. Built only through symmetric assignment, so g[i][j] and
/// g[j][i] are the same double, not approximately equal.
struct MetricTensor {
  ChartPoint at;
  Mat4 g;
};

/// Reduce an angle to [0, 2*pi).
double wrap_angle(double a);

bool is_symmetric_exact(const Mat4& m);

/// Positive definiteness of a symmetric 4x4 (smallest eigenvalue > 0).
bool is_positive_definite(const Mat4& m);
double min_eigenvalue(const Mat4& m);

}  // namespace sdmet

#endif  // SDMET_CHART_HPP
