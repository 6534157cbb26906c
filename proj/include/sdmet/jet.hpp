#ifndef SDMET_JET_HPP
#define SDMET_JET_HPP

#include <functional>

#include "sdmet/chart.hpp"
#include "sdmet/dual.hpp"

namespace sdmet {

using Dual4 = Dual2<4>;
using DVec4 = std::array<Dual4, 4>;

/// Value, gradient and symmetric Hessian of a scalar field at a point.
struct Jet2 {
  double value = 0.0;
  Vec4 grad{};
  Mat4 hess{};
};

/// A scalar field on one chart, evaluated through second-order duals so that
/// jets come out exact. Callers exclude singular loci.
struct ScalarField {
  Chart chart;
  std::function<Dual4(const DVec4&)> eval;
};

/// Tensor-valued analogue: 4x4 symmetric components of a metric as functions
/// of the chart coordinates, evaluated through duals (curvature needs two
/// derivatives of every component).
struct MetricField {
  Chart chart;
  std::function<SymMat4T<Dual4>(const DVec4&)> components;
};

/// Seed the four chart coordinates as independent dual variables.
DVec4 seed_point(const ChartPoint& p);

/// Evaluate a field's 2-jet at p. order selects how much of the jet is
/// populated (0: value, 1: +gradient, 2: +Hessian); first derivatives carry
/// relative accuracy better than 1e-10 and second better than 1e-6 (the
/// engine is exact forward differentiation, so both are at rounding level).
Jet2 jet_evaluate(const ScalarField& field, const ChartPoint& p, int order = 2);

/// Laplace-Beltrami operator of the hyperbolic metric (dx^2+dy^2+dz^2)/z^2
/// written in cylindrical coordinates (r, tau, z):
///   z^2 (f_rr + f_r/r + f_tautau/r^2 + f_zz) - z f_z,
/// with the symmetric-limit branch at r = 0. The field must live on CylLB
/// and not depend on theta.
double laplacian_h3(const ScalarField& field, const ChartPoint& p);

/// 1-form on H^3 in the basis (dr, dtau, dz).
struct OneFormH3 {
  double c_r = 0.0, c_tau = 0.0, c_z = 0.0;
};

/// 2-form on H^3 in the basis (dtau^dz, dz^dr, dr^dtau).
struct TwoFormH3 {
  double c_tau_z = 0.0, c_z_r = 0.0, c_r_tau = 0.0;
};

/// Hodge star of g_{H^3} with the orientation dx^dy^dz > 0, i.e.
/// r dr^dtau^dz positive. On 1-forms:
///   *dr = (r/z) dtau^dz,  *dtau = 1/(rz) dz^dr,  *dz = (r/z) dr^dtau,
/// and on 2-forms the inverse maps, so star(star(w)) = +w.
TwoFormH3 hodge_star_h3(const OneFormH3& w, const ChartPoint& p);
OneFormH3 hodge_star_h3(const TwoFormH3& w, const ChartPoint& p);

}  // namespace sdmet

#endif  // SDMET_JET_HPP
