#include "sdmet/curvature.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace sdmet {

namespace {

struct MetricJets {
  Mat4 g{};
  Mat4 g_inv{};
  double det = 0.0;
  // dg[k][i][j] = d_k g_ij, ddg[k][l][i][j] = d_k d_l g_ij
  std::array<Mat4, 4> dg{};
  std::array<std::array<Mat4, 4>, 4> ddg{};
};

MetricJets evaluate_metric_jets(const MetricField& metric, const ChartPoint& p) {
  if (metric.chart != p.chart)
    throw DomainError("curvature: point chart does not match metric chart");
  const SymMat4T<Dual4> comp = metric.components(seed_point(p));

  MetricJets jets;
  Eigen::Matrix4d ge;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Dual4& c = comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      jets.g[i][j] = c.val;
      ge(i, j) = c.val;
      for (int k = 0; k < 4; ++k) {
        jets.dg[k][i][j] = c.grad(k);
        for (int l = 0; l < 4; ++l) jets.ddg[k][l][i][j] = c.hess(k, l);
      }
    }

  const Eigen::JacobiSVD<Eigen::Matrix4d> svd(ge);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (!(smin > 0.0) || smax / smin > 1e12)
    throw SingularMetric("metric matrix numerically non-invertible at the query point");

  const Eigen::Matrix4d inv = ge.inverse();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) jets.g_inv[i][j] = inv(i, j);
  jets.det = ge.determinant();
  return jets;
}

Ten3 christoffel_from_jets(const MetricJets& m) {
  Ten3 gamma{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = j; k < 4; ++k) {
        double s = 0.0;
        for (int l = 0; l < 4; ++l)
          s += m.g_inv[i][l] * (m.dg[j][l][k] + m.dg[k][l][j] - m.dg[l][j][k]);
        gamma[i][j][k] = 0.5 * s;
        gamma[i][k][j] = gamma[i][j][k];
      }
  return gamma;
}

/// Levi-Civita permutation symbol on four indices.
int perm_sign(int i, int j, int k, int l) {
  const int idx[4] = {i, j, k, l};
  int sign = 1;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) sign = -sign;
    }
  return sign;
}

// Index pairs spanning Lambda^2, ordered so that pair A and pair A+3 are
// complementary (the flat Hodge star maps one to the other).
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};

}  // namespace

Ten3 christoffel(const MetricField& metric, const ChartPoint& p) {
  return christoffel_from_jets(evaluate_metric_jets(metric, p));
}

CurvatureBundle curvature(const MetricField& metric, const ChartPoint& p,
                          Orientation orientation) {
  const MetricJets m = evaluate_metric_jets(metric, p);
  CurvatureBundle out;
  out.christoffel = christoffel_from_jets(m);
  const Ten3& gamma = out.christoffel;

  // d_m g^{il} = -g^{ia} (d_m g_{ab}) g^{bl}
  std::array<Mat4, 4> dginv{};
  for (int mm = 0; mm < 4; ++mm)
    for (int i = 0; i < 4; ++i)
      for (int l = 0; l < 4; ++l) {
        double s = 0.0;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) s += m.g_inv[i][a] * m.dg[mm][a][b] * m.g_inv[b][l];
        dginv[mm][i][l] = -s;
      }

  // d_m Gamma^i_{jk}
  std::array<Ten3, 4> dgamma{};
  for (int mm = 0; mm < 4; ++mm)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = j; k < 4; ++k) {
          double s = 0.0;
          for (int l = 0; l < 4; ++l) {
            s += dginv[mm][i][l] * (m.dg[j][l][k] + m.dg[k][l][j] - m.dg[l][j][k]);
            s += m.g_inv[i][l] *
                 (m.ddg[mm][j][l][k] + m.ddg[mm][k][l][j] - m.ddg[mm][l][j][k]);
          }
          dgamma[mm][i][j][k] = 0.5 * s;
          dgamma[mm][i][k][j] = dgamma[mm][i][j][k];
        }

  // R^i_{jkl} = d_k Gamma^i_{lj} - d_l Gamma^i_{kj}
  //             + Gamma^i_{km} Gamma^m_{lj} - Gamma^i_{lm} Gamma^m_{kj}
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double s = dgamma[k][i][l][j] - dgamma[l][i][k][j];
          for (int mm = 0; mm < 4; ++mm)
            s += gamma[i][k][mm] * gamma[mm][l][j] - gamma[i][l][mm] * gamma[mm][k][j];
          out.riemann[i][j][k][l] = s;
        }

  Ten4 riem_low{};  // R_{ijkl}
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double s = 0.0;
          for (int mm = 0; mm < 4; ++mm) s += m.g[i][mm] * out.riemann[mm][j][k][l];
          riem_low[i][j][k][l] = s;
        }

  for (int j = 0; j < 4; ++j)
    for (int l = 0; l < 4; ++l) {
      double s = 0.0;
      for (int mm = 0; mm < 4; ++mm) s += out.riemann[mm][j][mm][l];
      out.ricci[j][l] = s;
    }
  // enforce exact symmetry of the stored Ricci (it is symmetric to rounding)
  for (int j = 0; j < 4; ++j)
    for (int l = j + 1; l < 4; ++l) {
      const double avg = 0.5 * (out.ricci[j][l] + out.ricci[l][j]);
      out.ricci[j][l] = avg;
      out.ricci[l][j] = avg;
    }

  out.scalar = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int l = 0; l < 4; ++l) out.scalar += m.g_inv[j][l] * out.ricci[j][l];

  // Weyl via the Schouten tensor S = (Ric - scalar g / 6) / 2:
  // C = Riem - g (kn) S (Kulkarni-Nomizu product)
  Mat4 schouten{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      schouten[i][j] = 0.5 * (out.ricci[i][j] - out.scalar * m.g[i][j] / 6.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          out.weyl[i][j][k][l] =
              riem_low[i][j][k][l] -
              (m.g[i][k] * schouten[j][l] - m.g[i][l] * schouten[j][k] +
               m.g[j][l] * schouten[i][k] - m.g[j][k] * schouten[i][l]);

  // Weyl and Hodge as operators on Lambda^2 in the coordinate pair basis.
  if (!(m.det > 0.0)) throw SingularMetric("metric volume form degenerate");
  const double vol = orientation.sign * std::sqrt(m.det);

  Eigen::Matrix<double, 6, 6> w_op, hodge, gram;
  for (int A = 0; A < 6; ++A) {
    const int ia = kPairs[A][0], ja = kPairs[A][1];
    for (int B = 0; B < 6; ++B) {
      const int ib = kPairs[B][0], jb = kPairs[B][1];
      gram(A, B) = m.g_inv[ia][ib] * m.g_inv[ja][jb] - m.g_inv[ia][jb] * m.g_inv[ja][ib];
      double w = 0.0, h = 0.0;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const double raise = m.g_inv[k][ib] * m.g_inv[l][jb];
          w += out.weyl[ia][ja][k][l] * raise;
          h += vol * perm_sign(ia, ja, k, l) * raise;
        }
      w_op(A, B) = w;
      hodge(A, B) = h;
    }
  }

  // Orthonormalize Lambda^2 (Gram-Schmidt via Cholesky of the Gram matrix),
  // then split by the +/-1 eigenspaces of the Hodge operator.
  const Eigen::LLT<Eigen::Matrix<double, 6, 6>> llt(gram);
  if (llt.info() != Eigen::Success)
    throw SingularMetric("Lambda^2 inner product not positive definite");
  const Eigen::Matrix<double, 6, 6> lmat = llt.matrixL();
  const Eigen::Matrix<double, 6, 6> linv = lmat.inverse();
  const Eigen::Matrix<double, 6, 6> w_on = lmat.transpose() * w_op * linv.transpose();
  Eigen::Matrix<double, 6, 6> h_on = lmat.transpose() * hodge * linv.transpose();
  h_on = 0.5 * (h_on + h_on.transpose()).eval();

  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> eig(h_on);
  Eigen::Matrix<double, 6, 6> proj_plus = Eigen::Matrix<double, 6, 6>::Zero();
  Eigen::Matrix<double, 6, 6> proj_minus = Eigen::Matrix<double, 6, 6>::Zero();
  for (int a = 0; a < 6; ++a) {
    const auto v = eig.eigenvectors().col(a);
    if (eig.eigenvalues()(a) > 0.0)
      proj_plus += v * v.transpose();
    else
      proj_minus += v * v.transpose();
  }

  // Tensor norm convention: |C|^2 = C_{ijkl} C^{ijkl} = 4 |operator|_F^2 in
  // an orthonormal basis of Lambda^2.
  out.w_plus_norm = 2.0 * (proj_plus * w_on * proj_plus).norm();
  out.w_minus_norm = 2.0 * (proj_minus * w_on * proj_minus).norm();
  return out;
}

double tensor_norm4(const Ten4& t, const Mat4& g_inv) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double up = 0.0;
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d)
                  up += g_inv[i][a] * g_inv[j][b] * g_inv[k][c] * g_inv[l][d] * t[a][b][c][d];
          s += t[i][j][k][l] * up;
        }
  return std::sqrt(s);
}

AsdRatio asd_ratio(const MetricField& metric, const ChartPoint& p) {
  const CurvatureBundle bundle = curvature(metric, p, Orientation{+1});
  const double norm = std::hypot(bundle.w_plus_norm, bundle.w_minus_norm);
  AsdRatio r;
  r.weyl_norm = norm;
  if (norm < 1e-10) {
    r.negligible_weyl = true;
    return r;
  }
  r.ratio_plus = bundle.w_plus_norm / norm;
  r.ratio_minus = bundle.w_minus_norm / norm;
  return r;
}

}  // namespace sdmet
