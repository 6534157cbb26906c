#include "sdmet/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "sdmet/curvature.hpp"

namespace sdmet {

std::array<double, 2> to_halfplane(double r, double z) {
  if (!(r > 0.0) || !(z > 0.0))
    throw DomainError("to_halfplane: requires r > 0 and z > 0");
  return {r * r - z * z, 2.0 * r * z};
}

std::array<double, 2> from_halfplane(double x1, double x2) {
  if (!(x2 > 0.0)) throw DomainError("from_halfplane: requires x2 > 0");
  const double big_r = std::hypot(x1, x2);
  // r^2 = (R + x1)/2 and z^2 = (R - x1)/2; one of the two cancels badly, so
  // compute the stable one and recover the other from x2 = 2rz.
  if (x1 >= 0.0) {
    const double r = std::sqrt(0.5 * (big_r + x1));
    return {r, x2 / (2.0 * r)};
  }
  const double z = std::sqrt(0.5 * (big_r - x1));
  return {x2 / (2.0 * z), z};
}

double hyperbolic_distance(double r1, double z1, double r2, double z2) {
  if (!(z1 > 0.0) || !(z2 > 0.0)) throw DomainError("hyperbolic_distance: z must be > 0");
  const double dr = r1 - r2, dz = z1 - z2;
  const double c = 1.0 + (dr * dr + dz * dz) / (2.0 * z1 * z2);
  return std::acosh(c);
}

namespace {

JoyceConfig derive_joyce(const MonopoleConfig& cfg) {
  if (cfg.n() < 1)
    throw ArgumentError("Identification: Joyce data needs n >= 1 (k >= 3)");
  std::vector<BoundaryPoint> boundary;
  boundary.reserve(static_cast<std::size_t>(cfg.n() + 2));
  boundary.push_back(BoundaryPoint::infinity());
  boundary.push_back(BoundaryPoint::zero());
  // q_a = -c_{a-2}^2 for a = 3..n+2: increasing heights give descending q's
  for (double c : cfg.heights()) boundary.push_back(BoundaryPoint::finite(-c * c));
  return JoyceConfig(semifree_data(cfg.n()), std::move(boundary));
}

}  // namespace

Identification::Identification(MonopoleConfig cfg)
    : cfg_(std::move(cfg)), joyce_(derive_joyce(cfg_)) {}

double verify_lemma(const Identification& id, double x1, double x2) {
  const PhiMatrix phi = phi_general(id.joyce(), x1, x2);
  const double v = potential_v_halfplane(id.monopole(), x1, x2);
  const double big_r = std::hypot(x1, x2);
  return phi.det() + x2 * v / (2.0 * big_r);
}

std::array<double, 3> verify_theorem(const Identification& id, double x1, double x2) {
  const ChartPoint p = ChartPoint::halfplane(x1, x2, 0.0, 0.0);
  const MetricTensor gj = metric_joyce(id.joyce(), p);
  const MetricTensor gt = metric_gtilde(id.monopole(), p);
  std::array<double, 3> res{};
  const int idx[3][2] = {{2, 2}, {2, 3}, {3, 3}};
  for (int a = 0; a < 3; ++a) {
    const double lhs = gj.g[idx[a][0]][idx[a][1]];
    const double rhs = gt.g[idx[a][0]][idx[a][1]];
    res[static_cast<std::size_t>(a)] = (lhs - rhs) / (1.0 + std::abs(rhs));
  }
  return res;
}

const char* check_name(Check c) {
  switch (c) {
    case Check::Lemma: return "lemma";
    case Check::Theorem: return "theorem";
    case Check::Connection: return "connection";
    case Check::ScalarFlat: return "scalar_flat";
    case Check::Asd: return "asd";
    case Check::CrossChart: return "cross_chart";
  }
  return "?";
}

Check parse_check(const std::string& name) {
  for (Check c : {Check::Lemma, Check::Theorem, Check::Connection, Check::ScalarFlat,
                  Check::Asd, Check::CrossChart})
    if (name == check_name(c)) return c;
  throw ArgumentError("unknown check \"" + name + "\"");
}

double CampaignTolerances::get(Check c) const {
  switch (c) {
    case Check::Lemma: return lemma;
    case Check::Theorem: return theorem;
    case Check::Connection: return connection;
    case Check::ScalarFlat: return scalar_flat;
    case Check::Asd: return asd;
    case Check::CrossChart: return cross_chart;
  }
  return 0.0;
}

void CampaignTolerances::set(Check c, double tol) {
  switch (c) {
    case Check::Lemma: lemma = tol; break;
    case Check::Theorem: theorem = tol; break;
    case Check::Connection: connection = tol; break;
    case Check::ScalarFlat: scalar_flat = tol; break;
    case Check::Asd: asd = tol; break;
    case Check::CrossChart: cross_chart = tol; break;
  }
}

int worker_count() {
  if (const char* env = std::getenv("SDMET_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

struct SamplePoint {
  double x1, x2;  // half-plane
  double r, z;    // quarter-plane image
};

std::vector<SamplePoint> draw_samples(const MonopoleConfig& cfg, const SampleSpec& spec) {
  if (spec.count <= 0) throw ArgumentError("SampleSpec: count must be positive");
  if (!(spec.x1_range[0] < spec.x1_range[1]) || !(spec.x2_range[0] < spec.x2_range[1]))
    throw ArgumentError("SampleSpec: empty range");
  if (!(spec.x2_range[0] > 0.0)) throw ArgumentError("SampleSpec: x2 lower bound must be > 0");

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> ux1(spec.x1_range[0], spec.x1_range[1]);
  std::uniform_real_distribution<double> ulx2(std::log(spec.x2_range[0]),
                                              std::log(spec.x2_range[1]));
  std::vector<SamplePoint> pts;
  pts.reserve(static_cast<std::size_t>(spec.count));
  int attempts = 0;
  while (static_cast<int>(pts.size()) < spec.count) {
    if (++attempts > 10000 * spec.count)
      throw ArgumentError("sampling: exclusion zones reject nearly every draw");
    const double x1 = ux1(rng);
    const double x2 = std::exp(ulx2(rng));
    const auto [r, z] = from_halfplane(x1, x2);
    bool ok = true;
    for (double c : cfg.heights())
      if (hyperbolic_distance(r, z, 0.0, c) < spec.exclusion_radius) {
        ok = false;
        break;
      }
    if (ok) pts.push_back(SamplePoint{x1, x2, r, z});
  }
  return pts;
}

/// Evaluate fn(point) -> residual (negative = skip) over all points with the
/// campaign workers; slots are written independently so the result does not
/// depend on the schedule.
template <class Fn>
std::vector<double> map_points(const std::vector<SamplePoint>& pts, const Fn& fn) {
  std::vector<double> out(pts.size());
  const int workers = std::min<int>(worker_count(), static_cast<int>(pts.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = fn(pts[i]);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < pts.size();
           i += static_cast<std::size_t>(workers))
        out[i] = fn(pts[i]);
    });
  for (auto& t : pool) t.join();
  return out;
}

CheckResult summarize(Check c, const std::vector<double>& residuals, double tol) {
  CheckResult res;
  res.name = check_name(c);
  res.tolerance = tol;
  double sum = 0.0;
  for (double v : residuals) {
    if (v < 0.0) continue;  // skipped point
    res.max_residual = std::max(res.max_residual, v);
    sum += v;
    ++res.samples;
  }
  res.mean_residual = res.samples > 0 ? sum / static_cast<double>(res.samples) : 0.0;
  res.pass = res.max_residual < tol;
  return res;
}

double max_abs3(const std::array<double, 3>& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

}  // namespace

VerificationReport run_campaign(const Identification& id, const SampleSpec& spec,
                                const std::vector<Check>& checks,
                                const CampaignTolerances& tol) {
  const MonopoleConfig& cfg = id.monopole();
  const std::vector<SamplePoint> pts = draw_samples(cfg, spec);

  VerificationReport report;
  report.heights = cfg.heights();
  report.spec = spec;

  const MetricField g_full = lebrun_full_field(cfg);
  const MetricField g_tilde = lebrun_tilde_field(cfg);
  const MetricField g_joyce = joyce_field(id.joyce());

  for (Check c : checks) {
    std::vector<double> residuals;
    switch (c) {
      case Check::Lemma:
        residuals = map_points(pts, [&](const SamplePoint& p) {
          return std::abs(verify_lemma(id, p.x1, p.x2));
        });
        break;
      case Check::Theorem:
        residuals = map_points(pts, [&](const SamplePoint& p) {
          return max_abs3(verify_theorem(id, p.x1, p.x2));
        });
        break;
      case Check::Connection:
        residuals = map_points(pts, [&](const SamplePoint& p) {
          if (p.r <= 1e-6) return -1.0;
          return max_abs3(verify_connection_identity(cfg, p.r, p.z));
        });
        break;
      case Check::ScalarFlat:
        residuals = map_points(pts, [&](const SamplePoint& p) {
          const ChartPoint q = ChartPoint::cyl(p.r, 0.0, p.z, 0.0);
          return std::abs(curvature(g_full, q).scalar);
        });
        break;
      case Check::Asd:
        residuals = map_points(pts, [&](const SamplePoint& p) {
          const ChartPoint q = ChartPoint::halfplane(p.x1, p.x2, 0.0, 0.0);
          double worst = -1.0;
          for (const MetricField* f : {&g_tilde, &g_joyce}) {
            const AsdRatio r = asd_ratio(*f, q);
            if (r.negligible_weyl) continue;
            worst = std::max(worst, std::min(r.ratio_plus, r.ratio_minus));
          }
          return worst;
        });
        break;
      case Check::CrossChart:
        residuals = map_points(pts, [&](const SamplePoint& p) {
          const double dv = potential_v_halfplane(cfg, p.x1, p.x2) -
                            potential_v(cfg, p.r, p.z);
          const double df = flux_f_halfplane(cfg, p.x1, p.x2) - flux_f(cfg, p.r, p.z);
          return std::max(std::abs(dv), std::abs(df));
        });
        break;
    }
    report.checks.push_back(summarize(c, residuals, tol.get(c)));
  }

  report.overall_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& r) { return r.pass; });
  return report;
}

}  // namespace sdmet
