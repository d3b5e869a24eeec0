#include "soliform/conformal.hpp"

#include <cmath>

namespace soliform {

namespace {

double ip(const Signature& sig, const Eigen::VectorXd& u,
          const Eigen::VectorXd& v) {
  return inner(sig, u, v);
}

Eigen::VectorXd slice2(const FramePoint& fp, int i, int j) {
  Eigen::VectorXd v(fp.x.size());
  for (Eigen::Index a = 0; a < fp.x.size(); ++a)
    v[a] = fp.jets[a].d2()(i, j);
  return v;
}

}  // namespace

ConformalField::ConformalField(AmbientSpace ambient, Eigen::VectorXd a,
                               double beta, Eigen::MatrixXd B,
                               Eigen::VectorXd gamma)
    : ambient_(std::move(ambient)),
      a_(std::move(a)),
      beta_(beta),
      B_(std::move(B)),
      gamma_(std::move(gamma)) {
  const int m = ambient_.container_dim();
  if (a_.size() != m || gamma_.size() != m || B_.rows() != m || B_.cols() != m)
    throw std::invalid_argument("ConformalField: dimension mismatch");
  auto check = validate_conformal_matrix(ambient_.signature(), B_);
  if (!check.valid)
    throw std::invalid_argument("ConformalField: B violates the sign constraint");
  if (ambient_.kind() == AmbientSpace::Kind::Quadric &&
      (a_.cwiseAbs().maxCoeff() != 0.0 || beta_ != 0.0))
    throw std::invalid_argument(
        "ConformalField: quadric family is generated by gamma and B only");
}

ConformalField ConformalField::dilation(const AmbientSpace& amb, double beta) {
  const int m = amb.container_dim();
  return ConformalField(amb, Eigen::VectorXd::Zero(m), beta,
                        Eigen::MatrixXd::Zero(m, m), Eigen::VectorXd::Zero(m));
}

ConformalField ConformalField::translation(const AmbientSpace& amb,
                                           const Eigen::VectorXd& gamma_half) {
  const int m = amb.container_dim();
  return ConformalField(amb, Eigen::VectorXd::Zero(m), 0.0,
                        Eigen::MatrixXd::Zero(m, m), gamma_half);
}

ConformalField ConformalField::quadric_height(const AmbientSpace& amb,
                                              const Eigen::VectorXd& gamma) {
  const int m = amb.container_dim();
  return ConformalField(amb, Eigen::VectorXd::Zero(m), 0.0,
                        Eigen::MatrixXd::Zero(m, m), gamma);
}

double sigma_at(const ConformalField& f, const Eigen::VectorXd& x) {
  f.ambient().require_point(x);
  const Signature& sig = f.ambient().signature();
  if (f.ambient().kind() == AmbientSpace::Kind::Flat)
    return ip(sig, f.a(), x) + f.beta();
  return -f.ambient().quadric_sign() * ip(sig, f.gamma(), x);
}

Eigen::VectorXd eval_field(const ConformalField& f, const Eigen::VectorXd& x) {
  f.ambient().require_point(x);
  const Signature& sig = f.ambient().signature();
  if (f.ambient().kind() == AmbientSpace::Kind::Flat) {
    const double s = ip(sig, f.a(), x) + f.beta();
    return s * x - 0.5 * ip(sig, x, x) * f.a() + f.B() * x + 0.5 * f.gamma();
  }
  const double eq = f.ambient().quadric_sign();
  return -eq * ip(sig, x, f.gamma()) * x + f.B() * x + f.gamma();
}

Eigen::VectorXd field_derivative_flat(const ConformalField& f,
                                      const Eigen::VectorXd& x,
                                      const Eigen::VectorXd& w) {
  const Signature& sig = f.ambient().signature();
  if (f.ambient().kind() == AmbientSpace::Kind::Flat) {
    const double s = ip(sig, f.a(), x) + f.beta();
    return ip(sig, f.a(), w) * x + s * w - ip(sig, x, w) * f.a() + f.B() * w;
  }
  const double eq = f.ambient().quadric_sign();
  return -eq * (ip(sig, w, f.gamma()) * x + ip(sig, x, f.gamma()) * w) +
         f.B() * w;
}

Eigen::VectorXd field_second_derivative_flat(const ConformalField& f,
                                             const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& w1,
                                             const Eigen::VectorXd& w2) {
  (void)x;
  const Signature& sig = f.ambient().signature();
  if (f.ambient().kind() == AmbientSpace::Kind::Flat)
    return ip(sig, f.a(), w1) * w2 + ip(sig, f.a(), w2) * w1 -
           ip(sig, w1, w2) * f.a();
  const double eq = f.ambient().quadric_sign();
  return -eq * (ip(sig, w2, f.gamma()) * w1 + ip(sig, w1, f.gamma()) * w2);
}

Eigen::VectorXd field_ambient_derivative(const ConformalField& f,
                                         const Eigen::VectorXd& x,
                                         const Eigen::VectorXd& w) {
  Eigen::VectorXd d = field_derivative_flat(f, x, w);
  if (f.ambient().kind() == AmbientSpace::Kind::Quadric)
    d = project_tangent(f.ambient().signature(), x, d);
  return d;
}

double sigma_derivative(const ConformalField& f, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& w) {
  (void)x;
  const Signature& sig = f.ambient().signature();
  if (f.ambient().kind() == AmbientSpace::Kind::Flat)
    return ip(sig, f.a(), w);
  return -f.ambient().quadric_sign() * ip(sig, f.gamma(), w);
}

double conformality_residual(const ConformalField& f, const Eigen::VectorXd& x,
                             int probes, Rng& rng) {
  f.ambient().require_point(x);
  const Signature& sig = f.ambient().signature();
  const int m = f.ambient().container_dim();
  const bool quadric = f.ambient().kind() == AmbientSpace::Kind::Quadric;
  const double s = sigma_at(f, x);
  double dev = 0.0;
  for (int p = 0; p < probes; ++p) {
    Eigen::VectorXd X = rng.normal_vector(m);
    Eigen::VectorXd Y = rng.normal_vector(m);
    if (quadric) {
      X = project_tangent(sig, x, X);
      Y = project_tangent(sig, x, Y);
    }
    const Eigen::VectorXd dX = field_ambient_derivative(f, x, X);
    const Eigen::VectorXd dY = field_ambient_derivative(f, x, Y);
    dev = std::max(dev, std::abs(ip(sig, dX, Y) + ip(sig, dY, X) -
                                 2.0 * s * ip(sig, X, Y)));
  }
  return dev;
}

double sigma_hessian_residual(const ConformalField& f,
                              const Eigen::VectorXd& x, int probes, Rng& rng) {
  f.ambient().require_point(x);
  const Signature& sig = f.ambient().signature();
  const int m = f.ambient().container_dim();

  if (f.ambient().kind() == AmbientSpace::Kind::Flat) {
    // sigma through jet arithmetic; its second derivatives must vanish.
    JetVec xs(m);
    for (int a = 0; a < m; ++a) xs[a] = Jet3::variable(m, a, x[a]);
    Jet3 s = Jet3::constant(m, f.beta());
    for (int a = 0; a < m; ++a)
      s += (sig.eps(a) * f.a()[a]) * xs[a];
    return s.d2().cwiseAbs().maxCoeff();
  }

  // Quadric: Hess sigma(X,Y) = <D_X (P grad sigma), Y> against -c sigma g.
  const double eq = f.ambient().quadric_sign();
  const double c = f.ambient().curvature();
  const double s = sigma_at(f, x);
  const Eigen::VectorXd w0 = -eq * f.gamma();  // container gradient of sigma
  double dev = 0.0;
  for (int p = 0; p < probes; ++p) {
    Eigen::VectorXd X = project_tangent(sig, x, rng.normal_vector(m));
    Eigen::VectorXd Y = project_tangent(sig, x, rng.normal_vector(m));
    const Eigen::VectorXd dgrad =
        -eq * (ip(sig, w0, X) * x + ip(sig, w0, x) * X);
    const double hess = ip(sig, dgrad, Y);
    dev = std::max(dev, std::abs(hess + c * s * ip(sig, X, Y)));
  }
  return dev;
}

SplitSample split_of(const FramePoint& fp, const ConformalField& f) {
  const Signature& sig = f.ambient().signature();
  const int n = fp.n();
  const Eigen::VectorXd Vamb = eval_field(f, fp.x);
  SplitSample s;
  s.C = ip(sig, Vamb, fp.N);
  s.sigma_restricted = sigma_at(f, fp.x);
  const Eigen::VectorXd Vtan = Vamb - fp.eps_N * s.C * fp.N;
  Eigen::VectorXd rhs(n);
  for (int j = 0; j < n; ++j) rhs[j] = ip(sig, Vtan, fp.E.col(j));
  s.V = fp.g_inv * rhs;
  s.reconstruction_residual =
      (Vamb - (fp.E * s.V + fp.eps_N * s.C * fp.N)).cwiseAbs().maxCoeff();
  return s;
}

SplitSample split_at(const Chart& chart, const ConformalField& f,
                     const Eigen::VectorXd& u) {
  if (!(chart.ambient == f.ambient()))
    throw std::invalid_argument("split_at: field/chart ambient mismatch");
  return split_of(frame_at(chart, u), f);
}

TangentFieldSample split_tangent_sample_of(const FramePoint& fp,
                                           const ConformalField& f) {
  const Signature& sig = f.ambient().signature();
  const int n = fp.n();
  const Eigen::VectorXd Vamb = eval_field(f, fp.x);
  Eigen::VectorXd rhs(n);
  for (int j = 0; j < n; ++j) rhs[j] = ip(sig, Vamb, fp.E.col(j));
  TangentFieldSample s;
  s.comp = fp.g_inv * rhs;
  s.dcomp.resize(n, n);
  for (int k = 0; k < n; ++k) {
    const Eigen::VectorXd dV = field_derivative_flat(f, fp.x, fp.E.col(k));
    Eigen::VectorXd drhs(n);
    for (int j = 0; j < n; ++j)
      drhs[j] = ip(sig, dV, fp.E.col(j)) + ip(sig, Vamb, slice2(fp, k, j));
    const Eigen::MatrixXd dginv = -fp.g_inv * fp.dg[k] * fp.g_inv;
    const Eigen::VectorXd dcomp_k = dginv * rhs + fp.g_inv * drhs;
    for (int i = 0; i < n; ++i) s.dcomp(k, i) = dcomp_k[i];
  }
  return s;
}

TangentField split_tangent_field(const Chart& chart, const ConformalField& f) {
  if (!(chart.ambient == f.ambient()))
    throw std::invalid_argument("split_tangent_field: ambient mismatch");
  return [chart, f](const Eigen::VectorXd& u) {
    return split_tangent_sample_of(frame_at(chart, u), f);
  };
}

AngleData angle_data_of(const FramePoint& fp, const ConformalField& f) {
  const Signature& sig = f.ambient().signature();
  const int n = fp.n();
  const Eigen::VectorXd Vamb = eval_field(f, fp.x);

  AngleData out;
  out.C = ip(sig, Vamb, fp.N);
  out.sigma = sigma_at(f, fp.x);
  out.N_sigma = sigma_derivative(f, fp.x, fp.N);

  std::vector<Eigen::VectorXd> dV(n);
  for (int k = 0; k < n; ++k)
    dV[k] = field_derivative_flat(f, fp.x, fp.E.col(k));

  Eigen::VectorXd dC(n);
  for (int k = 0; k < n; ++k)
    dC[k] = ip(sig, dV[k], fp.N) + ip(sig, Vamb, fp.dN.col(k));
  out.grad_C = fp.g_inv * dC;

  // d2N(m,k) = -d_m(A^i_k E_i)
  auto d2N = [&](int mm, int k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(fp.x.size());
    for (int i = 0; i < n; ++i)
      v -= fp.dA[mm](i, k) * fp.E.col(i) + fp.A(i, k) * slice2(fp, mm, i);
    return v;
  };

  Eigen::MatrixXd ddC(n, n);
  for (int mm = 0; mm < n; ++mm)
    for (int k = 0; k < n; ++k) {
      const Eigen::VectorXd d2V =
          field_second_derivative_flat(f, fp.x, fp.E.col(mm), fp.E.col(k)) +
          field_derivative_flat(f, fp.x, slice2(fp, mm, k));
      ddC(mm, k) = ip(sig, d2V, fp.N) + ip(sig, dV[k], fp.dN.col(mm)) +
                   ip(sig, dV[mm], fp.dN.col(k)) +
                   ip(sig, Vamb, d2N(mm, k));
    }

  out.hess_C.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = ddC(i, j);
      for (int k = 0; k < n; ++k) s -= fp.Gamma[k](i, j) * dC[k];
      out.hess_C(i, j) = s;
    }
  out.hess_C = 0.5 * (out.hess_C + out.hess_C.transpose().eval());
  return out;
}

}  // namespace soliform
