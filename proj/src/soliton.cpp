#include "soliform/soliton.hpp"

#include <cmath>
#include <limits>

namespace soliform {

namespace {

constexpr double kZeroBand = 1e-6;     // classification zero threshold
constexpr double kStationary = 1e-6;   // |grad C| counted as stationary
constexpr double kInconclusive = 1e-3;

double max_abs(const Eigen::MatrixXd& T) { return T.cwiseAbs().maxCoeff(); }

}  // namespace

double extract_lambda_of(const FramePoint& fp, const TangentFieldSample& V) {
  const RicciData ric = ricci_of(fp);
  const Eigen::MatrixXd L = lie_metric_of(fp, V);
  const double divV = 0.5 * (fp.g_inv * L).trace();
  return (ric.scalar + divV) / fp.n();
}

double extract_lambda_at(const Chart& chart, const TangentField& V,
                         const Eigen::VectorXd& u) {
  return extract_lambda_of(frame_at(chart, u), V(u));
}

double soliton_residual_of(const FramePoint& fp, const TangentFieldSample& V,
                           double lambda) {
  const RicciData ric = ricci_of(fp);
  const Eigen::MatrixXd L = lie_metric_of(fp, V);
  const Eigen::MatrixXd T = ric.ric + 0.5 * L - lambda * fp.g;
  return max_abs(fp.whiten_form(T));
}

double soliton_residual_at(const Chart& chart, const TangentField& V,
                           double lambda, const Eigen::VectorXd& u) {
  return soliton_residual_of(frame_at(chart, u), V(u), lambda);
}

double lemma31_residual_of(const FramePoint& fp, const ConformalField& f) {
  const double sigma = sigma_at(f, fp.x);
  const TangentFieldSample V = split_tangent_sample_of(fp, f);
  const Eigen::MatrixXd L = lie_metric_of(fp, V);
  const double C = split_of(fp, f).C;
  const Eigen::MatrixXd T =
      2.0 * sigma * fp.g - L + 2.0 * fp.eps_N * C * fp.a_bilinear();
  return max_abs(fp.whiten_form(T));
}

double lemma31_residual_at(const Chart& chart, const ConformalField& f,
                           const Eigen::VectorXd& u) {
  return lemma31_residual_of(frame_at(chart, u), f);
}

double lemma32_residual_of(const FramePoint& fp, const ConformalField& f,
                           double lambda) {
  const RicciData ric = ricci_of(fp);
  const double psi = sigma_at(f, fp.x) - lambda;
  const double C = split_of(fp, f).C;
  const Eigen::MatrixXd T =
      ric.ric + psi * fp.g + fp.eps_N * C * fp.a_bilinear();
  return max_abs(fp.whiten_form(T));
}

double lemma32_residual_at(const Chart& chart, const ConformalField& f,
                           double lambda, const Eigen::VectorXd& u) {
  return lemma32_residual_of(frame_at(chart, u), f, lambda);
}

double lemma33_residual_of(const FramePoint& fp, const ConformalField& f) {
  const Signature& sig = f.ambient().signature();
  const int n = fp.n();
  const AngleData ang = angle_data_of(fp, f);
  const SplitSample sp = split_of(fp, f);
  const Eigen::VectorXd dNV = field_ambient_derivative(f, fp.x, fp.N);
  Eigen::VectorXd t(n);
  for (int j = 0; j < n; ++j) t[j] = inner(sig, dNV, fp.E.col(j));
  const Eigen::VectorXd tangential = fp.g_inv * t;
  const Eigen::VectorXd resid = ang.grad_C + tangential + fp.A * sp.V;
  return fp.whiten_vector(resid).cwiseAbs().maxCoeff();
}

double lemma33_residual_at(const Chart& chart, const ConformalField& f,
                           const Eigen::VectorXd& u) {
  return lemma33_residual_of(frame_at(chart, u), f);
}

double lemma34_residual_of(const FramePoint& fp, const ConformalField& f) {
  const int n = fp.n();
  const double c = f.ambient().curvature();
  const AngleData ang = angle_data_of(fp, f);
  const TangentFieldSample V = split_tangent_sample_of(fp, f);

  const Eigen::MatrixXd O = covariant_weingarten_of(fp, V.comp);
  Eigen::MatrixXd Obil = fp.g * O;
  Obil = 0.5 * (Obil + Obil.transpose().eval());

  Eigen::MatrixXd cov(n, n);  // cov(i,l) = (nabla_i V)^l
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      double s = V.dcomp(i, l);
      for (int k = 0; k < n; ++k) s += fp.Gamma[l](i, k) * V.comp[k];
      cov(i, l) = s;
    }
  Eigen::MatrixXd AdV(n, n);  // AdV(i,j) = g(A nabla_i V, E_j)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int p = 0; p < n; ++p)
        for (int l = 0; l < n; ++l)
          s += fp.g(p, j) * fp.A(p, l) * cov(i, l);
      AdV(i, j) = s;
    }

  const Eigen::MatrixXd rhs =
      -(c * ang.C + ang.N_sigma) * fp.g + ang.sigma * fp.a_bilinear() +
      fp.eps_N * ang.C * fp.a2_bilinear() - Obil -
      (AdV + AdV.transpose());
  return max_abs(fp.whiten_form(ang.hess_C - rhs));
}

double lemma34_residual_at(const Chart& chart, const ConformalField& f,
                           const Eigen::VectorXd& u) {
  return lemma34_residual_of(frame_at(chart, u), f);
}

ConcircularSample concircular_point(const FramePoint& fp,
                                    const ConformalField& f) {
  const AngleData ang = angle_data_of(fp, f);
  ConcircularSample s;
  s.C = ang.C;
  s.hess_orth = fp.whiten_form(ang.hess_C);
  s.k_expected = f.ambient().curvature() + fp.eps_N * fp.H * fp.H;
  s.b_expected = -(ang.N_sigma + fp.eps_N * ang.sigma * fp.H);
  return s;
}

ConcircularFit concircular_fit(const std::vector<ConcircularSample>& samples) {
  if (samples.size() < 3)
    throw std::invalid_argument("concircular_fit: need at least 3 samples");
  ConcircularFit fit;

  double cmin = samples[0].C, cmax = samples[0].C;
  double kmin = samples[0].k_expected, kmax = samples[0].k_expected;
  double bmin = samples[0].b_expected, bmax = samples[0].b_expected;
  for (const auto& s : samples) {
    cmin = std::min(cmin, s.C);
    cmax = std::max(cmax, s.C);
    kmin = std::min(kmin, s.k_expected);
    kmax = std::max(kmax, s.k_expected);
    bmin = std::min(bmin, s.b_expected);
    bmax = std::max(bmax, s.b_expected);
  }
  fit.k_expected = 0.5 * (kmin + kmax);
  fit.b_expected = 0.5 * (bmin + bmax);
  fit.k_expected_spread = kmax - kmin;
  fit.b_expected_spread = bmax - bmin;

  if (cmax - cmin < 1e-10) {
    fit.degenerate = true;
    fit.k = fit.b = std::numeric_limits<double>::quiet_NaN();
    fit.fit_residual = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }

  // Rows C_s k - b = -hess_orth(i,i) over all samples and diagonal entries.
  Eigen::Matrix2d M = Eigen::Matrix2d::Zero();
  Eigen::Vector2d v = Eigen::Vector2d::Zero();
  for (const auto& s : samples) {
    const int n = static_cast<int>(s.hess_orth.rows());
    for (int i = 0; i < n; ++i) {
      const double y = -s.hess_orth(i, i);
      M(0, 0) += s.C * s.C;
      M(0, 1) += -s.C;
      M(1, 0) += -s.C;
      M(1, 1) += 1.0;
      v[0] += s.C * y;
      v[1] += -y;
    }
  }
  const Eigen::Vector2d kb = M.ldlt().solve(v);
  fit.k = kb[0];
  fit.b = kb[1];

  double resid = 0.0;
  for (const auto& s : samples) {
    const int n = static_cast<int>(s.hess_orth.rows());
    const Eigen::MatrixXd T =
        s.hess_orth +
        (fit.k * s.C - fit.b) * Eigen::MatrixXd::Identity(n, n);
    resid = std::max(resid, max_abs(T));
  }
  fit.fit_residual = resid;
  return fit;
}

MuFit mu_fit_of(const FramePoint& fp, double psi, double C) {
  const Eigen::MatrixXd Aw = fp.whiten_form(fp.a_bilinear());
  const double anorm2 = (Aw.array() * Aw.array()).sum();
  if (anorm2 <= 1e-24)
    throw NumericalError("mu_fit: Weingarten operator vanishes, mu undefined");
  const Eigen::MatrixXd Rw = fp.whiten_form(ricci_of(fp).ric);
  MuFit out;
  out.mu = (Rw.array() * Aw.array()).sum() / anorm2;
  out.residual = max_abs(Rw - out.mu * Aw);
  const double den = out.mu + fp.eps_N * C;
  if (std::abs(den) > 1e-10)
    out.H_predicted = -fp.eps_N * psi / den;
  return out;
}

MuFit mu_fit_at(const Chart& chart, const Eigen::VectorXd& u, double psi,
                double C) {
  return mu_fit_of(frame_at(chart, u), psi, C);
}

std::string to_string(TashiroCase c) {
  switch (c) {
    case TashiroCase::ProductLine: return "ProductLine";
    case TashiroCase::Euclidean: return "Euclidean";
    case TashiroCase::PseudoHyperbolicZero: return "PseudoHyperbolicZero";
    case TashiroCase::PseudoHyperbolicNegative:
      return "PseudoHyperbolicNegative";
    case TashiroCase::PseudoHyperbolicUnresolved:
      return "PseudoHyperbolicUnresolved";
    case TashiroCase::Hyperbolic: return "Hyperbolic";
    case TashiroCase::Spherical: return "Spherical";
    case TashiroCase::Indeterminate: return "Indeterminate";
    case TashiroCase::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string to_string(StationaryEvidence e) {
  switch (e) {
    case StationaryEvidence::None: return "none";
    case StationaryEvidence::Isolated: return "isolated";
    case StationaryEvidence::Unknown: return "unknown";
  }
  return "?";
}

TashiroCase tashiro_classify(double k, double b, StationaryEvidence evidence,
                             WarpProfile profile) {
  if (!std::isfinite(k) || !std::isfinite(b))
    return TashiroCase::Indeterminate;
  const bool k_zero = std::abs(k) <= kZeroBand;
  const bool b_zero = std::abs(b) <= kZeroBand;
  if (k_zero) return b_zero ? TashiroCase::ProductLine : TashiroCase::Euclidean;
  if (k > 0.0) return TashiroCase::Spherical;
  switch (evidence) {
    case StationaryEvidence::Isolated:
      return TashiroCase::Hyperbolic;
    case StationaryEvidence::None:
      switch (profile) {
        case WarpProfile::ZeroType: return TashiroCase::PseudoHyperbolicZero;
        case WarpProfile::NegativeType:
          return TashiroCase::PseudoHyperbolicNegative;
        case WarpProfile::NotApplicable:
          return TashiroCase::PseudoHyperbolicUnresolved;
      }
      return TashiroCase::PseudoHyperbolicUnresolved;
    case StationaryEvidence::Unknown:
      return TashiroCase::Indeterminate;
  }
  return TashiroCase::Indeterminate;
}

double concircular_solution(OdeCase ode_case, double a, double b, double c,
                            double s) {
  switch (ode_case) {
    case OdeCase::IA:
      if (b != 0.0)
        throw std::invalid_argument("concircular_solution: case IA needs b=0");
      return a * s;
    case OdeCase::IB:
      if (b == 0.0)
        throw std::invalid_argument("concircular_solution: case IB needs b!=0");
      return 0.5 * b * s * s + a;
    case OdeCase::IIA0:
    case OdeCase::IIAminus:
    case OdeCase::IIB:
    case OdeCase::III:
      if (c <= 0.0)
        throw std::invalid_argument("concircular_solution: c must be positive");
      break;
  }
  switch (ode_case) {
    case OdeCase::IIA0: return a * std::exp(c * s) - b / (c * c);
    case OdeCase::IIAminus: return a * std::sinh(c * s) - b / (c * c);
    case OdeCase::IIB: return a * std::cosh(c * s) - b / (c * c);
    case OdeCase::III: return a * std::cos(c * s) + b / (c * c);
    default: break;
  }
  throw std::invalid_argument("concircular_solution: unknown case");
}

StationaryEvidence stationary_scan(const Chart& chart, const ConformalField& f,
                                   int grid_per_dim) {
  if (grid_per_dim < 2)
    throw std::invalid_argument("stationary_scan: grid too coarse");
  const int n = chart.n();
  const Box& box = chart.map.domain();

  std::vector<int> idx(n, 0);
  std::vector<std::vector<int>> hits;
  double min_norm = std::numeric_limits<double>::infinity();

  auto node = [&](int i, int d) {
    const double w = box.hi[d] - box.lo[d];
    const double inset = 1e-3 * w;
    const double lo = box.lo[d] + inset, hi = box.hi[d] - inset;
    return lo + (hi - lo) * i / (grid_per_dim - 1);
  };

  bool done = false;
  while (!done) {
    Eigen::VectorXd u(n);
    for (int d = 0; d < n; ++d) u[d] = node(idx[d], d);
    try {
      const FramePoint fp = frame_at(chart, u);
      const AngleData ang = angle_data_of(fp, f);
      const double norm = fp.whiten_vector(ang.grad_C).norm();
      min_norm = std::min(min_norm, norm);
      if (norm < kStationary) hits.push_back(idx);
    } catch (const NumericalError&) {
      // skip degenerate nodes; the scan reports what it could resolve
    }
    // advance multi-index
    int d = 0;
    while (d < n) {
      if (++idx[d] < grid_per_dim) break;
      idx[d] = 0;
      ++d;
    }
    done = (d == n);
  }

  if (hits.empty()) {
    if (min_norm >= kStationary && min_norm <= kInconclusive)
      return StationaryEvidence::Unknown;
    return StationaryEvidence::None;
  }
  for (size_t p = 0; p < hits.size(); ++p)
    for (size_t q = p + 1; q < hits.size(); ++q) {
      int dmax = 0;
      for (int d = 0; d < n; ++d)
        dmax = std::max(dmax, std::abs(hits[p][d] - hits[q][d]));
      if (dmax <= 1) return StationaryEvidence::Unknown;  // non-singleton blob
    }
  return StationaryEvidence::Isolated;
}

}  // namespace soliform
