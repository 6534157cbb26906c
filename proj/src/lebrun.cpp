#include "sdmet/lebrun.hpp"

#include <cmath>

namespace sdmet {

namespace {

void require_cyl(const ChartPoint& p, bool need_positive_r) {
  if (p.chart != Chart::CylLB) throw DomainError("LeBrun metric: CylLB chart required");
  if (need_positive_r && !(p[0] > 0.0))
    throw DomainError("LeBrun metric: r must be > 0 (dtau degenerates on the axis)");
}

Mat4 to_mat(const SymMat4T<double>& g) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = g[i][j];
  return m;
}

}  // namespace

MetricTensor metric_glb(const MonopoleConfig& cfg, const ChartPoint& p) {
  require_cyl(p, true);
  return MetricTensor{p, to_mat(lebrun_full_components(cfg, p[0], p[2]))};
}

MetricTensor metric_glb_rescaled(const MonopoleConfig& cfg, const ChartPoint& p) {
  require_cyl(p, true);
  return MetricTensor{p, to_mat(lebrun_rescaled_components(cfg, p[0], p[2]))};
}

MetricTensor metric_gtilde(const MonopoleConfig& cfg, const ChartPoint& p) {
  if (p.chart != Chart::HalfPlane) throw DomainError("gtilde: HalfPlane chart required");
  return MetricTensor{p, to_mat(lebrun_tilde_components(cfg, p[0], p[1]))};
}

double conformal_factor(const MonopoleConfig& cfg, const ChartPoint& p) {
  if (p.chart != Chart::HalfPlane)
    throw DomainError("conformal_factor: HalfPlane chart required");
  const double x1 = p[0], x2 = p[1];
  const double v = potential_v_halfplane(cfg, x1, x2);
  const double big_r = std::sqrt(x1 * x1 + x2 * x2);
  const double z2 = 0.5 * (big_r - x1);
  return 2.0 * big_r * (big_r - x1) / (x2 * x2 * z2 * v);
}

MetricField lebrun_full_field(const MonopoleConfig& cfg) {
  return MetricField{Chart::CylLB, [cfg](const DVec4& x) {
                       return lebrun_full_components(cfg, x[0], x[2]);
                     }};
}

MetricField lebrun_rescaled_field(const MonopoleConfig& cfg) {
  return MetricField{Chart::CylLB, [cfg](const DVec4& x) {
                       return lebrun_rescaled_components(cfg, x[0], x[2]);
                     }};
}

MetricField lebrun_tilde_field(const MonopoleConfig& cfg) {
  return MetricField{Chart::HalfPlane, [cfg](const DVec4& x) {
                       return lebrun_tilde_components(cfg, x[0], x[1]);
                     }};
}

}  // namespace sdmet
