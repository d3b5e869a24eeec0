#include "soliform/hypersurface.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace soliform {

namespace {

constexpr double kDetFloor = 1e-10;

Eigen::VectorXd coord_slice_value(const std::vector<Jet3>& jets) {
  Eigen::VectorXd x(jets.size());
  for (size_t a = 0; a < jets.size(); ++a) x[a] = jets[a].value();
  return x;
}

}  // namespace

Eigen::MatrixXd FramePoint::whiten_form(const Eigen::MatrixXd& T) const {
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success)
    throw NumericalError("whiten_form: metric not positive definite");
  Eigen::MatrixXd L = llt.matrixL();
  Eigen::MatrixXd Y = L.triangularView<Eigen::Lower>().solve(T);
  Eigen::MatrixXd Z =
      L.triangularView<Eigen::Lower>().solve(Y.transpose()).transpose();
  return Z;
}

Eigen::VectorXd FramePoint::whiten_vector(const Eigen::VectorXd& v) const {
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success)
    throw NumericalError("whiten_vector: metric not positive definite");
  Eigen::MatrixXd L = llt.matrixL();
  return L.transpose() * v;
}

Eigen::MatrixXd FramePoint::whiten_operator(const Eigen::MatrixXd& op) const {
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success)
    throw NumericalError("whiten_operator: metric not positive definite");
  Eigen::MatrixXd L = llt.matrixL();
  Eigen::MatrixXd W =
      L.triangularView<Eigen::Lower>().solve(op.transpose()).transpose();
  return L.transpose() * W;
}

FramePoint frame_at(const Chart& chart, const Eigen::VectorXd& u) {
  const Signature& sig = chart.ambient.signature();
  const int n = chart.n();
  const int m = chart.ambient.container_dim();

  FramePoint fp;
  fp.u = u;
  JetVec jv = chart.map.jets(u);
  fp.jets.assign(jv.data(), jv.data() + jv.size());
  fp.x = coord_slice_value(fp.jets);

  if (chart.ambient.kind() == AmbientSpace::Kind::Quadric &&
      !chart.ambient.on_quadric(fp.x))
    throw NumericalError("frame_at: chart image off the quadric");

  fp.E.resize(m, n);
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < n; ++i) fp.E(a, i) = fp.jets[a].d1()[i];

  // Container inner products of derivative slices.
  auto ip_cols = [&](const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    return (sig.eps_vector().array() * p.array() * q.array()).sum();
  };
  auto f2 = [&](int i, int j) {
    Eigen::VectorXd v(m);
    for (int a = 0; a < m; ++a) v[a] = fp.jets[a].d2()(i, j);
    return v;
  };
  auto f3 = [&](int i, int j, int k) {
    Eigen::VectorXd v(m);
    for (int a = 0; a < m; ++a) v[a] = fp.jets[a].d3(i, j, k);
    return v;
  };

  fp.g.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      fp.g(i, j) = ip_cols(fp.E.col(i), fp.E.col(j));

  const double detg = fp.g.determinant();
  if (std::abs(detg) < kDetFloor)
    throw NumericalError("frame_at: degenerate induced metric, |det g| = " +
                         std::to_string(std::abs(detg)));
  fp.g_inv = fp.g.inverse();

  fp.dg.assign(n, Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        fp.dg[k](i, j) =
            ip_cols(f2(k, i), fp.E.col(j)) + ip_cols(fp.E.col(i), f2(k, j));

  fp.d2g.assign(n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          fp.d2g[l][k](i, j) = ip_cols(f3(l, k, i), fp.E.col(j)) +
                               ip_cols(f2(k, i), f2(l, j)) +
                               ip_cols(f2(l, i), f2(k, j)) +
                               ip_cols(fp.E.col(i), f3(l, k, j));

  // Unit normal: kernel of the signature-weighted constraint rows.
  const int rows = (chart.ambient.kind() == AmbientSpace::Kind::Quadric)
                       ? n + 1
                       : n;
  Eigen::MatrixXd C(rows, m);
  for (int i = 0; i < n; ++i)
    C.row(i) = (sig.eps_vector().array() * fp.E.col(i).array()).transpose();
  if (rows == n + 1)
    C.row(n) = (sig.eps_vector().array() * fp.x.array()).transpose();

  Eigen::FullPivLU<Eigen::MatrixXd> lu(C);
  if (lu.dimensionOfKernel() != 1)
    throw NumericalError("frame_at: normal direction not unique");
  Eigen::VectorXd N0 = lu.kernel().col(0);
  const double nn = ip_cols(N0, N0);
  if (std::abs(nn) <= 1e-12 * N0.squaredNorm())
    throw NumericalError("frame_at: null normal direction");
  Eigen::VectorXd N = N0 / std::sqrt(std::abs(nn));
  fp.eps_N = nn > 0.0 ? 1.0 : -1.0;

  switch (chart.orientation) {
    case NormalOrientation::PositionVector:
      if (N.dot(fp.x) < 0.0) N = -N;
      break;
    case NormalOrientation::LastComponentPositive:
      if (N[m - 1] < 0.0) N = -N;
      break;
  }
  fp.N = N;

  // Scalar second fundamental form h_jk = <N, d_j d_k f> and the Weingarten
  // operator A^i_k = g^{ij} h_jk (sign convention: ambient derivative of N
  // along E_k equals -A E_k).
  Eigen::MatrixXd h(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) h(j, k) = ip_cols(fp.N, f2(j, k));
  fp.A = fp.g_inv * h;
  fp.H = fp.eps_N * fp.A.trace() / n;

  fp.dN = -fp.E * fp.A;

  // d_m A = d_m(g^-1) h + g^-1 d_m h, with
  // d_m h_jk = <d_m N, f_jk> + <N, f_mjk>.
  fp.dA.assign(n, Eigen::MatrixXd::Zero(n, n));
  for (int mm = 0; mm < n; ++mm) {
    Eigen::MatrixXd dh(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        dh(j, k) = ip_cols(fp.dN.col(mm), f2(j, k)) +
                   ip_cols(fp.N, f3(mm, j, k));
    Eigen::MatrixXd dginv = -fp.g_inv * fp.dg[mm] * fp.g_inv;
    fp.dA[mm] = dginv * h + fp.g_inv * dh;
  }

  fp.Gamma.assign(n, Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += fp.g_inv(k, l) *
               (fp.dg[i](j, l) + fp.dg[j](i, l) - fp.dg[l](i, j));
        fp.Gamma[k](i, j) = 0.5 * s;
      }

  fp.dGamma.assign(n,
                   std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));
  for (int mm = 0; mm < n; ++mm) {
    Eigen::MatrixXd dginv = -fp.g_inv * fp.dg[mm] * fp.g_inv;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int l = 0; l < n; ++l) {
            s += dginv(k, l) *
                 (fp.dg[i](j, l) + fp.dg[j](i, l) - fp.dg[l](i, j));
            s += fp.g_inv(k, l) * (fp.d2g[mm][i](j, l) + fp.d2g[mm][j](i, l) -
                                   fp.d2g[mm][l](i, j));
          }
          fp.dGamma[mm][k](i, j) = 0.5 * s;
        }
  }

  return fp;
}

RicciData ricci_of(const FramePoint& fp) {
  const int n = fp.n();
  RicciData out;
  out.ric = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double r = 0.0;
      for (int k = 0; k < n; ++k) {
        r += fp.dGamma[k][k](j, i);
        r -= fp.dGamma[j][k](k, i);
        for (int l = 0; l < n; ++l) {
          r += fp.Gamma[k](k, l) * fp.Gamma[l](j, i);
          r -= fp.Gamma[k](j, l) * fp.Gamma[l](k, i);
        }
      }
      out.ric(i, j) = r;
    }
  out.ric = 0.5 * (out.ric + out.ric.transpose().eval());
  out.scalar = (fp.g_inv * out.ric).trace();
  return out;
}

RicciData ricci_at(const Chart& chart, const Eigen::VectorXd& u) {
  return ricci_of(frame_at(chart, u));
}

TangentField tangent_field_from_map(const SmoothMap& W) {
  return [W](const Eigen::VectorXd& u) {
    JetVec jets = W.jets(u);
    const int n = W.in_dim();
    TangentFieldSample s;
    s.comp.resize(W.out_dim());
    s.dcomp.resize(n, W.out_dim());
    for (int i = 0; i < W.out_dim(); ++i) {
      s.comp[i] = jets[i].value();
      for (int k = 0; k < n; ++k) s.dcomp(k, i) = jets[i].d1()[k];
    }
    return s;
  };
}

Eigen::VectorXd gradient_of(const FramePoint& fp, const Jet3& phi) {
  return fp.g_inv * phi.d1();
}

Eigen::VectorXd gradient_at(const Chart& chart, const SmoothMap& phi,
                            const Eigen::VectorXd& u) {
  if (phi.out_dim() != 1)
    throw std::invalid_argument("gradient_at: phi must be scalar");
  FramePoint fp = frame_at(chart, u);
  return gradient_of(fp, phi.jets(u)[0]);
}

Eigen::MatrixXd hessian_scalar_of(const FramePoint& fp, const Jet3& phi) {
  const int n = fp.n();
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = phi.d2()(i, j);
      for (int k = 0; k < n; ++k) s -= fp.Gamma[k](i, j) * phi.d1()[k];
      h(i, j) = s;
    }
  return h;
}

Eigen::MatrixXd hessian_scalar_at(const Chart& chart, const SmoothMap& phi,
                                  const Eigen::VectorXd& u) {
  if (phi.out_dim() != 1)
    throw std::invalid_argument("hessian_scalar_at: phi must be scalar");
  FramePoint fp = frame_at(chart, u);
  return hessian_scalar_of(fp, phi.jets(u)[0]);
}

Eigen::MatrixXd lie_metric_of(const FramePoint& fp,
                              const TangentFieldSample& W) {
  const int n = fp.n();
  Eigen::MatrixXd cov(n, n);  // cov(i,k) = (nabla_i W)^k
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double s = W.dcomp(i, k);
      for (int l = 0; l < n; ++l) s += fp.Gamma[k](i, l) * W.comp[l];
      cov(i, k) = s;
    }
  Eigen::MatrixXd L(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += fp.g(k, j) * cov(i, k) + fp.g(k, i) * cov(j, k);
      L(i, j) = s;
    }
  return L;
}

Eigen::MatrixXd lie_metric_at(const Chart& chart, const TangentField& W,
                              const Eigen::VectorXd& u) {
  return lie_metric_of(frame_at(chart, u), W(u));
}

Eigen::MatrixXd covariant_weingarten_of(const FramePoint& fp,
                                        const Eigen::VectorXd& V) {
  const int n = fp.n();
  Eigen::MatrixXd O = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        double s = fp.dA[i](k, j);
        for (int l = 0; l < n; ++l) {
          s += fp.Gamma[k](i, l) * fp.A(l, j);
          s -= fp.Gamma[l](i, j) * fp.A(k, l);
        }
        O(k, j) += V[i] * s;
      }
  }
  return O;
}

Eigen::MatrixXd covariant_weingarten_at(const Chart& chart,
                                        const Eigen::VectorXd& u,
                                        const Eigen::VectorXd& V) {
  return covariant_weingarten_of(frame_at(chart, u), V);
}

double codazzi_residual_of(const FramePoint& fp) {
  const int n = fp.n();
  auto nabla = [&](int i, int j, int k) {
    // ((nabla_{E_i} A) E_j)^k
    double s = fp.dA[i](k, j);
    for (int l = 0; l < n; ++l) {
      s += fp.Gamma[k](i, l) * fp.A(l, j);
      s -= fp.Gamma[l](i, j) * fp.A(k, l);
    }
    return s;
  };
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd t(n);
      for (int k = 0; k < n; ++k) t[k] = nabla(i, j, k) - nabla(j, i, k);
      dev = std::max(dev, fp.whiten_vector(t).cwiseAbs().maxCoeff());
    }
  return dev;
}

double codazzi_residual_at(const Chart& chart, const Eigen::VectorXd& u) {
  return codazzi_residual_of(frame_at(chart, u));
}

UmbilicityReport umbilicity_of(const FramePoint& fp) {
  const int n = fp.n();
  Eigen::MatrixXd dev_op =
      fp.whiten_operator(fp.A) -
      fp.eps_N * fp.H * Eigen::MatrixXd::Identity(n, n);
  UmbilicityReport r;
  r.H = fp.H;
  r.deviation = dev_op.cwiseAbs().maxCoeff();
  r.is_umbilic = r.deviation <= kUmbilicTol;
  return r;
}

UmbilicityReport umbilicity_at(const Chart& chart, const Eigen::VectorXd& u) {
  return umbilicity_of(frame_at(chart, u));
}

}  // namespace soliform
