#include "sdmet/jet.hpp"

#include <cmath>

namespace sdmet {

DVec4 seed_point(const ChartPoint& p) {
  DVec4 c;
  for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] = Dual4::variable(p[i], i);
  return c;
}

Jet2 jet_evaluate(const ScalarField& field, const ChartPoint& p, int order) {
  if (field.chart != p.chart)
    throw DomainError("jet_evaluate: point chart does not match field chart");
  if (order < 0 || order > 2) throw ArgumentError("jet_evaluate: order must be 0, 1 or 2");
  const Dual4 v = field.eval(seed_point(p));
  Jet2 jet;
  jet.value = v.val;
  if (order >= 1)
    for (int i = 0; i < 4; ++i) jet.grad[static_cast<std::size_t>(i)] = v.grad(i);
  if (order >= 2)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        jet.hess[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.hess(i, j);
  return jet;
}

double laplacian_h3(const ScalarField& field, const ChartPoint& p) {
  if (p.chart != Chart::CylLB || field.chart != Chart::CylLB)
    throw DomainError("laplacian_h3: CylLB chart required");
  const double r = p[0], z = p[2];
  const Jet2 jet = jet_evaluate(field, p, 2);
  const double f_r = jet.grad[0], f_z = jet.grad[2];
  const double f_rr = jet.hess[0][0], f_tt = jet.hess[1][1], f_zz = jet.hess[2][2];
  double euclid;
  if (r < 1e-9) {
    // axis limit for a smooth axially symmetric field: f_r/r -> f_rr
    euclid = 2.0 * f_rr + f_zz;
  } else {
    euclid = f_rr + f_r / r + f_tt / (r * r) + f_zz;
  }
  return z * z * euclid - z * f_z;
}

TwoFormH3 hodge_star_h3(const OneFormH3& w, const ChartPoint& p) {
  if (p.chart != Chart::CylLB) throw DomainError("hodge_star_h3: CylLB chart required");
  const double r = p[0], z = p[2];
  if (!(r > 0.0)) throw DomainError("hodge_star_h3: r must be > 0 (dtau degenerates)");
  return TwoFormH3{(r / z) * w.c_r, w.c_tau / (r * z), (r / z) * w.c_z};
}

OneFormH3 hodge_star_h3(const TwoFormH3& w, const ChartPoint& p) {
  if (p.chart != Chart::CylLB) throw DomainError("hodge_star_h3: CylLB chart required");
  const double r = p[0], z = p[2];
  if (!(r > 0.0)) throw DomainError("hodge_star_h3: r must be > 0 (dtau degenerates)");
  return OneFormH3{(z / r) * w.c_tau_z, (r * z) * w.c_z_r, (z / r) * w.c_r_tau};
}

}  // namespace sdmet
