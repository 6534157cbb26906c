#ifndef SDMET_EQUIVALENCE_HPP
#define SDMET_EQUIVALENCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sdmet/joyce.hpp"
#include "sdmet/lebrun.hpp"
#include "sdmet/monopole.hpp"

namespace sdmet {

/// Coordinate change between the quarter-plane (r, z) and the upper
/// half-plane (x1, x2):  x1 = r^2 - z^2, x2 = 2rz, inverted through
/// r^2 = (R + x1)/2, z^2 = (R - x1)/2 with the better-conditioned branch
/// picked by the sign of x1.
std::array<double, 2> to_halfplane(double r, double z);
std::array<double, 2> from_halfplane(double x1, double x2);

/// Distance in H^3 between meridian points (r1, z1) and (r2, z2) at the same
/// angle: cosh d = 1 + ((r1-r2)^2 + (z1-z2)^2) / (2 z1 z2).
double hyperbolic_distance(double r1, double z1, double r2, double z2);

/// A monopole configuration together with the Joyce data it induces:
/// boundary points infinity, 0, q_a = -c_{a-2}^2 (a = 3..n+2) and canonical
/// semi-free stabilizer data. Requires n >= 1 (Joyce needs k >= 3).
class Identification {
 public:
  explicit Identification(MonopoleConfig cfg);

  const MonopoleConfig& monopole() const { return cfg_; }
  const JoyceConfig& joyce() const { return joyce_; }

 private:
  MonopoleConfig cfg_;
  JoyceConfig joyce_;
};

/// Residual of the determinant identity  a1 b2 - a2 b1 = -x2 V / (2R):
/// returns det phi + x2 V / (2R), which vanishes identically on the
/// half-plane.
double verify_lemma(const Identification& id, double x1, double x2);

/// Residuals of the three fiber-block identities between the Joyce metric
/// (y1, y2 block) and the rescaled LeBrun metric (theta, tau block) under the
/// identity map on (x1, x2):
///   g_y1y1 = gt_thetatheta, g_y1y2 = gt_thetatau, g_y2y2 = gt_tautau.
/// Each difference is scaled by 1 + |gtilde component| since the tau
/// components grow like R^2/x2^2 near the boundary.
std::array<double, 3> verify_theorem(const Identification& id, double x1, double x2);

/// Sampling description for a verification campaign. Points are drawn in the
/// half-plane, uniformly in x1 and log-uniformly in x2, rejecting anything
/// within exclusion_radius (hyperbolic) of a monopole point or below the x2
/// floor; the identities are exact but cancellation grows near the poles.
struct SampleSpec {
  int count = 500;
  std::uint64_t seed = 1;
  std::array<double, 2> x1_range{-25.0, 25.0};
  std::array<double, 2> x2_range{0.05, 20.0};
  double exclusion_radius = 0.05;
};

enum class Check { Lemma, Theorem, Connection, ScalarFlat, Asd, CrossChart };

const char* check_name(Check c);
Check parse_check(const std::string& name);

/// Per-check residual thresholds; the defaults are the documented contract.
struct CampaignTolerances {
  double lemma = 1e-13;
  double theorem = 1e-10;
  double connection = 1e-9;
  double scalar_flat = 1e-5;
  double asd = 1e-5;
  double cross_chart = 1e-12;

  double get(Check c) const;
  void set(Check c, double tol);
};

struct CheckResult {
  std::string name;
  long samples = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct VerificationReport {
  std::vector<double> heights;
  SampleSpec spec;
  std::vector<CheckResult> checks;
  bool overall_pass = true;
};

/// Run the selected checks over a common seeded sample. Deterministic for a
/// fixed seed regardless of how many workers evaluate the points (points are
/// drawn up front; aggregation order is fixed). Check failures are reported,
/// never thrown.
VerificationReport run_campaign(const Identification& id, const SampleSpec& spec,
                                const std::vector<Check>& checks,
                                const CampaignTolerances& tol = {});

/// Worker count for campaigns: SDMET_THREADS caps it, default is the
/// hardware concurrency.
int worker_count();

}  // namespace sdmet

#endif  // SDMET_EQUIVALENCE_HPP
