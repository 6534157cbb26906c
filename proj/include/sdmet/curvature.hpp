#ifndef SDMET_CURVATURE_HPP
#define SDMET_CURVATURE_HPP

#include "sdmet/chart.hpp"
#include "sdmet/jet.hpp"

namespace sdmet {

using Ten3 = std::array<std::array<std::array<double, 4>, 4>, 4>;
using Ten4 = std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4>;

/// Sign of the orientation relative to the chart's coordinate volume form
/// dx^0 ^ dx^1 ^ dx^2 ^ dx^3.
struct Orientation {
  int sign = +1;
};

/// Pointwise curvature data of a metric field. Conventions:
///   Gamma^i_{jk} = (1/2) g^{il} (d_j g_{lk} + d_k g_{lj} - d_l g_{jk}),
///   R^i_{jkl}    = d_k Gamma^i_{lj} - d_l Gamma^i_{kj}
///                  + Gamma^i_{km} Gamma^m_{lj} - Gamma^i_{lm} Gamma^m_{kj},
///   Ric_{jl} = R^m_{jml}, scalar = g^{jl} Ric_{jl}
/// (hyperbolic space comes out with negative scalar curvature). weyl holds
/// the fully covariant C_{ijkl}; the +/- norms are tensor norms of the two
/// halves of the Weyl operator under the Hodge star of the given orientation.
struct CurvatureBundle {
  Ten3 christoffel{};
  Ten4 riemann{};  // R^i_{jkl}
  Mat4 ricci{};
  double scalar = 0.0;
  Ten4 weyl{};  // C_{ijkl}
  double w_plus_norm = 0.0;
  double w_minus_norm = 0.0;
};

Ten3 christoffel(const MetricField& metric, const ChartPoint& p);

CurvatureBundle curvature(const MetricField& metric, const ChartPoint& p,
                          Orientation orientation = {});

/// Self-dual / anti-self-dual content of the Weyl tensor. Flipping the
/// orientation swaps the two ratios, so reporting both covers either
/// convention; a metric is (anti-)self-dual when one ratio vanishes.
struct AsdRatio {
  double ratio_plus = 0.0;   // |W+| / |W|
  double ratio_minus = 0.0;  // |W-| / |W|
  double weyl_norm = 0.0;
  bool negligible_weyl = false;  // |W| < 1e-10: ratios meaningless
};

AsdRatio asd_ratio(const MetricField& metric, const ChartPoint& p);

/// Pointwise tensor norm sqrt(C_{ijkl} C^{ijkl}) of a (0,4) tensor under g.
double tensor_norm4(const Ten4& t, const Mat4& g_inv);

/// Pointwise tensor norm sqrt(T_{ij} T^{ij}) of a (0,2) tensor under g.
double tensor_norm2(const Mat4& t, const Mat4& g_inv);

/// Inverse of a symmetric 4x4; throws SingularMetric past condition 1e12.
Mat4 invert_sym4(const Mat4& g);

}  // namespace sdmet

#endif  // SDMET_CURVATURE_HPP
