#ifndef SDMET_MONOPOLE_HPP
#define SDMET_MONOPOLE_HPP

#include <complex>
#include <vector>

#include "sdmet/chart.hpp"
#include "sdmet/dual.hpp"
#include "sdmet/jet.hpp"

namespace sdmet {

/// Heights 0 < c_1 < ... < c_n of the monopole points on the z-axis.
class MonopoleConfig {
 public:
  MonopoleConfig() = default;
  explicit MonopoleConfig(std::vector<double> heights);

  int n() const { return static_cast<int>(heights_.size()); }
  const std::vector<double>& heights() const { return heights_; }

 private:
  std::vector<double> heights_;
};

/// Axis interval I_alpha = (c_{alpha-1}, c_alpha), alpha in [1, n+1], with
/// c_0 = 0; the last interval is unbounded above and carries no upper value.
struct AxisInterval {
  int alpha = 1;
  double lower = 0.0;
  double upper = 0.0;
  bool unbounded = false;
};

AxisInterval axis_interval(const MonopoleConfig& cfg, int alpha);

/// Queries closer than this (Euclidean, in the (r,z) half-plane or the
/// (x1,x2) half-plane) to a pole are rejected as singular: the closed forms
/// lose all precision there.
inline constexpr double kSingularRadius = 1e-12;

namespace detail {

void require_cyl_domain(double r, double z);
void require_halfplane_domain(double x2);
void require_off_pole(double c, double r, double z);
void require_off_pole_halfplane(double q, double x1, double x2);
void require_height(double c);

}  // namespace detail

/// Green's function of the hyperbolic Laplacian with pole at (0,0,c),
/// normalized so that Delta Gamma = -2*pi*delta. Closed form
///   -1/2 + (r^2+z^2+c^2) / (2 sqrt((r^2+(z-c)^2)(r^2+(z+c)^2))),
/// where the factored radicand equals (c^2+r^2+z^2)^2 - 4c^2z^2 but stays
/// well conditioned near the pole.
template <class T>
T green(double c, const T& r, const T& z) {
  detail::require_height(c);
  detail::require_cyl_domain(value_of(r), value_of(z));
  detail::require_off_pole(c, value_of(r), value_of(z));
  const T r2 = r * r;
  const T dm = z - c, dp = z + c;
  const T q = (r2 + dm * dm) * (r2 + dp * dp);
  return (r2 + z * z + c * c) / (2.0 * sqrt(q)) - 0.5;
}

/// V = 1 + sum of Green's functions over the monopole heights; positive on
/// the whole domain and harmonic away from the poles.
template <class T>
T potential_v(const MonopoleConfig& cfg, const T& r, const T& z) {
  T v = 1.0;
  for (double c : cfg.heights()) v = v + green(c, r, z);
  return v;
}

/// Flux function of a single monopole,
///   f_c = (r^2+z^2-c^2) / (2 sqrt((c^2+r^2+z^2)^2 - 4c^2z^2)) - 1/2,
/// with values in [-1, 0]; f_c(0,z) = -1 below the pole and 0 above.
template <class T>
T flux_fc(double c, const T& r, const T& z) {
  detail::require_height(c);
  detail::require_cyl_domain(value_of(r), value_of(z));
  detail::require_off_pole(c, value_of(r), value_of(z));
  const T r2 = r * r;
  const T dm = z - c, dp = z + c;
  const T q = (r2 + dm * dm) * (r2 + dp * dp);
  return (r2 + z * z - c * c) / (2.0 * sqrt(q)) - 0.5;
}

/// f = f_{c_1} + ... + f_{c_n}; on the axis interval I_alpha its limit is the
/// integer alpha - n - 1.
template <class T>
T flux_f(const MonopoleConfig& cfg, const T& r, const T& z) {
  T f = 0.0;
  for (double c : cfg.heights()) f = f + flux_fc(c, r, z);
  return f;
}

/// Coefficient of the local connection form on U_alpha: f + n + 1 - alpha.
/// Tends to 0 as r -> 0 with z in I_alpha, which is what lets the form extend
/// over that axis piece.
template <class T>
T local_connection_coeff(const MonopoleConfig& cfg, int alpha, const T& r, const T& z) {
  if (alpha < 1 || alpha > cfg.n() + 1)
    throw ArgumentError("local_connection_coeff: alpha out of [1, n+1]");
  return flux_f(cfg, r, z) + static_cast<double>(cfg.n() + 1 - alpha);
}

/// Transition function g_{alpha beta} = exp(i (beta - alpha) tau) of the
/// circle bundle over the axis-interval cover.
std::complex<double> transition(int alpha, int beta, double tau);

/// V in half-plane coordinates:
///   V = 1 - n/2 + sum (R - q_a) / (2 r_a),
/// with q_a = -c_{a-2}^2, r_a = |(x1,x2) - (q_a,0)|, R = |(x1,x2)|. The same
/// analytic function as potential_v composed with x1 = r^2 - z^2, x2 = 2rz.
template <class T>
T potential_v_halfplane(const MonopoleConfig& cfg, const T& x1, const T& x2) {
  detail::require_halfplane_domain(value_of(x2));
  const int n = cfg.n();
  const T big_r = sqrt(x1 * x1 + x2 * x2);
  T v = 1.0 - 0.5 * n;
  for (double c : cfg.heights()) {
    const double q = -c * c;
    detail::require_off_pole_halfplane(q, value_of(x1), value_of(x2));
    const T dx = x1 - q;
    const T ra = sqrt(dx * dx + x2 * x2);
    v = v + (big_r - q) / (2.0 * ra);
  }
  return v;
}

/// f in half-plane coordinates: f = -n/2 + sum (R + q_a) / (2 r_a).
template <class T>
T flux_f_halfplane(const MonopoleConfig& cfg, const T& x1, const T& x2) {
  detail::require_halfplane_domain(value_of(x2));
  const int n = cfg.n();
  const T big_r = sqrt(x1 * x1 + x2 * x2);
  T f = -0.5 * n;
  for (double c : cfg.heights()) {
    const double q = -c * c;
    detail::require_off_pole_halfplane(q, value_of(x1), value_of(x2));
    const T dx = x1 - q;
    const T ra = sqrt(dx * dx + x2 * x2);
    f = f + (big_r + q) / (2.0 * ra);
  }
  return f;
}

/// Scalar-field wrappers for the jet engine.
ScalarField scalar_field_green(double c);
ScalarField scalar_field_v(const MonopoleConfig& cfg);
ScalarField scalar_field_f(const MonopoleConfig& cfg);
ScalarField scalar_field_v_halfplane(const MonopoleConfig& cfg);
ScalarField scalar_field_f_halfplane(const MonopoleConfig& cfg);

/// Componentwise residual of d(f dtau) - *dV at (r, z), in the 2-form basis
/// (dtau^dz, dz^dr, dr^dtau). Zero (to rounding) is the statement that
/// i f dtau is a local connection form with curvature i*dV. Requires r well
/// off the axis (r > 1e-6) since dtau degenerates there.
std::array<double, 3> verify_connection_identity(const MonopoleConfig& cfg, double r, double z);

}  // namespace sdmet

#endif  // SDMET_MONOPOLE_HPP
