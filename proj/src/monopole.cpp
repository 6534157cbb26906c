#include "sdmet/monopole.hpp"

#include <cmath>

namespace sdmet {

MonopoleConfig::MonopoleConfig(std::vector<double> heights) : heights_(std::move(heights)) {
  double prev = 0.0;
  for (double c : heights_) {
    if (!(c > prev))
      throw ArgumentError("monopole heights must be strictly increasing and positive");
    prev = c;
  }
}

AxisInterval axis_interval(const MonopoleConfig& cfg, int alpha) {
  const int n = cfg.n();
  if (alpha < 1 || alpha > n + 1) throw ArgumentError("axis_interval: alpha out of [1, n+1]");
  AxisInterval iv;
  iv.alpha = alpha;
  iv.lower = (alpha == 1) ? 0.0 : cfg.heights()[static_cast<std::size_t>(alpha - 2)];
  if (alpha == n + 1) {
    iv.unbounded = true;
  } else {
    iv.upper = cfg.heights()[static_cast<std::size_t>(alpha - 1)];
  }
  return iv;
}

namespace detail {

void require_cyl_domain(double r, double z) {
  if (!(r >= 0.0)) throw DomainError("r must be >= 0");
  if (!(z > 0.0)) throw DomainError("z must be > 0");
}

void require_halfplane_domain(double x2) {
  if (!(x2 > 0.0)) throw DomainError("x2 must be > 0");
}

void require_off_pole(double c, double r, double z) {
  const double dz = z - c;
  if (r * r + dz * dz <= kSingularRadius * kSingularRadius)
    throw SingularPoint("query coincides with the monopole point (0, c)");
}

void require_off_pole_halfplane(double q, double x1, double x2) {
  const double dx = x1 - q;
  if (dx * dx + x2 * x2 <= kSingularRadius * kSingularRadius)
    throw SingularPoint("query coincides with the monopole image (q, 0)");
}

void require_height(double c) {
  if (!(c > 0.0)) throw ArgumentError("monopole height must be positive");
}

}  // namespace detail

std::complex<double> transition(int alpha, int beta, double tau) {
  return std::polar(1.0, static_cast<double>(beta - alpha) * tau);
}

ScalarField scalar_field_green(double c) {
  return ScalarField{Chart::CylLB,
                     [c](const DVec4& x) { return green(c, x[0], x[2]); }};
}

ScalarField scalar_field_v(const MonopoleConfig& cfg) {
  return ScalarField{Chart::CylLB,
                     [cfg](const DVec4& x) { return potential_v(cfg, x[0], x[2]); }};
}

ScalarField scalar_field_f(const MonopoleConfig& cfg) {
  return ScalarField{Chart::CylLB,
                     [cfg](const DVec4& x) { return flux_f(cfg, x[0], x[2]); }};
}

ScalarField scalar_field_v_halfplane(const MonopoleConfig& cfg) {
  return ScalarField{Chart::HalfPlane,
                     [cfg](const DVec4& x) { return potential_v_halfplane(cfg, x[0], x[1]); }};
}

ScalarField scalar_field_f_halfplane(const MonopoleConfig& cfg) {
  return ScalarField{Chart::HalfPlane,
                     [cfg](const DVec4& x) { return flux_f_halfplane(cfg, x[0], x[1]); }};
}

std::array<double, 3> verify_connection_identity(const MonopoleConfig& cfg, double r, double z) {
  if (!(r > 1e-6)) throw DomainError("connection identity: r must exceed 1e-6 (axis excluded)");
  const ChartPoint p = ChartPoint::cyl(r, 0.0, z, 0.0);

  // d(f dtau) = f_r dr^dtau - f_z dtau^dz
  const Jet2 jf = jet_evaluate(scalar_field_f(cfg), p, 1);
  const TwoFormH3 dfdtau{-jf.grad[2], 0.0, jf.grad[0]};

  const Jet2 jv = jet_evaluate(scalar_field_v(cfg), p, 1);
  const TwoFormH3 star_dv = hodge_star_h3(OneFormH3{jv.grad[0], 0.0, jv.grad[2]}, p);

  return {dfdtau.c_tau_z - star_dv.c_tau_z, dfdtau.c_z_r - star_dv.c_z_r,
          dfdtau.c_r_tau - star_dv.c_r_tau};
}

}  // namespace sdmet
