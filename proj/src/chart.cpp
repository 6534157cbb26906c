#include "sdmet/chart.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace sdmet {

const char* chart_name(Chart c) {
  return c == Chart::CylLB ? "CylLB" : "HalfPlane";
}

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * M_PI;
  double w = std::fmod(a, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;  // fmod can land exactly on 2*pi after the add
  return w;
}

ChartPoint ChartPoint::cyl(double r, double tau, double z, double theta) {
  if (!(r >= 0.0)) throw DomainError("CylLB point: r must be >= 0");
  if (!(z > 0.0)) throw DomainError("CylLB point: z must be > 0");
  return ChartPoint{Chart::CylLB, {r, wrap_angle(tau), z, wrap_angle(theta)}};
}

ChartPoint ChartPoint::halfplane(double x1, double x2, double y1, double y2) {
  if (!(x2 > 0.0)) throw DomainError("HalfPlane point: x2 must be > 0");
  return ChartPoint{Chart::HalfPlane, {x1, x2, wrap_angle(y1), wrap_angle(y2)}};
}

bool is_symmetric_exact(const Mat4& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

double min_eigenvalue(const Mat4& m) {
  Eigen::Matrix4d e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(e);
  return solver.eigenvalues().minCoeff();
}

bool is_positive_definite(const Mat4& m) {
  return min_eigenvalue(m) > 0.0;
}

}  // namespace sdmet
