#ifndef SDMET_LEBRUN_HPP
#define SDMET_LEBRUN_HPP

#include "sdmet/chart.hpp"
#include "sdmet/jet.hpp"
#include "sdmet/monopole.hpp"

namespace sdmet {

/// Toric LeBrun metric on the CylLB chart, coordinates (r, tau, z, theta):
///   g = z^2 V g_{H^3} + (z^2/V)(dtheta + f dtau)^2,
/// so the nonzero components are
///   g_rr = g_zz = V,  g_tautau = V r^2 + z^2 f^2 / V,
///   g_tautheta = z^2 f / V,  g_thetatheta = z^2 / V.
template <class T>
SymMat4T<T> lebrun_full_components(const MonopoleConfig& cfg, const T& r, const T& z) {
  const T v = potential_v(cfg, r, z);
  const T f = flux_f(cfg, r, z);
  const T z2 = z * z;
  SymMat4T<T> g{};
  g[0][0] = v;
  g[2][2] = v;
  g[3][3] = z2 / v;
  g[1][1] = v * (r * r) + f * f * g[3][3];
  g[1][3] = f * g[3][3];
  g[3][1] = g[1][3];
  return g;
}

/// The same metric divided by the conformal factor z^2 V:
///   (dr^2 + dz^2)/z^2 + (r^2/z^2) dtau^2 + V^{-2}(dtheta + f dtau)^2.
template <class T>
SymMat4T<T> lebrun_rescaled_components(const MonopoleConfig& cfg, const T& r, const T& z) {
  const T v = potential_v(cfg, r, z);
  const T f = flux_f(cfg, r, z);
  const T inv_z2 = 1.0 / (z * z);
  const T inv_v2 = 1.0 / (v * v);
  SymMat4T<T> g{};
  g[0][0] = inv_z2;
  g[2][2] = inv_z2;
  g[3][3] = inv_v2;
  g[1][1] = r * r * inv_z2 + f * f * inv_v2;
  g[1][3] = f * inv_v2;
  g[3][1] = g[1][3];
  return g;
}

/// Rescaled LeBrun metric on the HalfPlane chart, coordinates
/// (x1, x2, theta, tau):
///   gtilde = g_{H^2} + (2R^2/x2^2) [ (1 + x1/R) dtau^2
///                                  + (1 - x1/R)(dtheta + f dtau)^2 / V^2 ],
/// with the half-plane V and f. Related to the full metric by
/// gtilde = (2R(R - x1)) / (x2^2 z^2 V) * g.
template <class T>
SymMat4T<T> lebrun_tilde_components(const MonopoleConfig& cfg, const T& x1, const T& x2) {
  const T v = potential_v_halfplane(cfg, x1, x2);
  const T f = flux_f_halfplane(cfg, x1, x2);
  const T big_r = sqrt(x1 * x1 + x2 * x2);
  const T inv_x22 = 1.0 / (x2 * x2);
  const T pref = 2.0 * big_r * big_r * inv_x22;
  const T plus = 1.0 + x1 / big_r;
  const T minus = 1.0 - x1 / big_r;
  const T inv_v2 = 1.0 / (v * v);
  SymMat4T<T> g{};
  g[0][0] = inv_x22;
  g[1][1] = inv_x22;
  g[2][2] = pref * minus * inv_v2;
  g[2][3] = pref * minus * f * inv_v2;
  g[3][2] = g[2][3];
  g[3][3] = pref * (plus + minus * f * f * inv_v2);
  return g;
}

/// Which of the three variants a LeBrun metric tensor represents.
enum class LeBrunVariant { Full, Rescaled, TildeHalfPlane };

/// Monopole configuration plus variant; Full/Rescaled live on CylLB, the
/// tilde variant on HalfPlane.
struct LeBrunChartData {
  MonopoleConfig cfg;
  LeBrunVariant variant = LeBrunVariant::Full;

  Chart chart() const {
    return variant == LeBrunVariant::TildeHalfPlane ? Chart::HalfPlane : Chart::CylLB;
  }
};

MetricTensor metric_glb(const MonopoleConfig& cfg, const ChartPoint& p);
MetricTensor metric_glb_rescaled(const MonopoleConfig& cfg, const ChartPoint& p);
MetricTensor metric_gtilde(const MonopoleConfig& cfg, const ChartPoint& p);

/// Conformal factor 2R(R - x1) / (x2^2 z^2 V) with z^2 = (R - x1)/2, so that
/// gtilde = conformal_factor * g_full under the chart identification.
double conformal_factor(const MonopoleConfig& cfg, const ChartPoint& p);

/// Metric fields for the curvature engine.
MetricField lebrun_full_field(const MonopoleConfig& cfg);
MetricField lebrun_rescaled_field(const MonopoleConfig& cfg);
MetricField lebrun_tilde_field(const MonopoleConfig& cfg);

}  // namespace sdmet

#endif  // SDMET_LEBRUN_HPP
