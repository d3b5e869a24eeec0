#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soliform/conformal.hpp"
#include "soliform/hypersurface.hpp"

namespace soliform {

/// Everything measured at one point of a soliton verification run.
struct SolitonSample {
  Eigen::VectorXd u;
  double lambda = 0.0;
  double psi = 0.0;  // sigma restricted minus lambda
  double C = 0.0;
  std::map<std::string, double> residuals;
};

/// lambda = (S + div V)/n, the unique value making the soliton equation
/// trace-consistent.
double extract_lambda_of(const FramePoint& fp, const TangentFieldSample& V);
double extract_lambda_at(const Chart& chart, const TangentField& V,
                         const Eigen::VectorXd& u);

/// max orthonormalized entry of Ric + (1/2) L_V g - lambda g.
double soliton_residual_of(const FramePoint& fp, const TangentFieldSample& V,
                           double lambda);
double soliton_residual_at(const Chart& chart, const TangentField& V,
                           double lambda, const Eigen::VectorXd& u);

/// Residual of the restriction identity
/// 2 sigma g - L_V g + 2 eps_N C (A-bilinear) = 0.
double lemma31_residual_of(const FramePoint& fp, const ConformalField& f);
double lemma31_residual_at(const Chart& chart, const ConformalField& f,
                           const Eigen::VectorXd& u);

/// Residual of Ric + psi g + eps_N C (A-bilinear) = 0 with
/// psi = sigma|_M - lambda.
double lemma32_residual_of(const FramePoint& fp, const ConformalField& f,
                           double lambda);
double lemma32_residual_at(const Chart& chart, const ConformalField& f,
                           double lambda, const Eigen::VectorXd& u);

/// Residual of grad C = -(ambient derivative of the field along N)^T - A V.
double lemma33_residual_of(const FramePoint& fp, const ConformalField& f);
double lemma33_residual_at(const Chart& chart, const ConformalField& f,
                           const Eigen::VectorXd& u);

/// Residual of the angle-function Hessian identity
/// Hess C = -(cC + N sigma) g + sigma A + eps_N C A^2
///          - (nabla_V A) - sym(A nabla V).
double lemma34_residual_of(const FramePoint& fp, const ConformalField& f);
double lemma34_residual_at(const Chart& chart, const ConformalField& f,
                           const Eigen::VectorXd& u);

/// One point of a special-concircular fit: angle value, Hessian in an
/// orthonormalized basis, and the predicted constants at that point.
struct ConcircularSample {
  double C = 0.0;
  Eigen::MatrixXd hess_orth;
  double k_expected = 0.0;  // c + eps_N H^2
  double b_expected = 0.0;  // -(N sigma + eps_N sigma H)
};

ConcircularSample concircular_point(const FramePoint& fp,
                                    const ConformalField& f);

struct ConcircularFit {
  double k = 0.0, b = 0.0;
  double fit_residual = 0.0;
  double k_expected = 0.0, b_expected = 0.0;
  double k_expected_spread = 0.0, b_expected_spread = 0.0;
  bool degenerate = false;  // C constant across samples: k unidentifiable
};

/// Least squares for (k,b) in Hess C = (-kC + b) g over >= 3 samples.
ConcircularFit concircular_fit(const std::vector<ConcircularSample>& samples);

struct MuFit {
  double mu = 0.0;
  double residual = 0.0;
  std::optional<double> H_predicted;  // -eps_N psi / (mu + eps_N C)
};

/// Closed-form projection of Ric onto the Weingarten bilinear form.
MuFit mu_fit_of(const FramePoint& fp, double psi, double C);
MuFit mu_fit_at(const Chart& chart, const Eigen::VectorXd& u, double psi,
                double C);

enum class TashiroCase {
  ProductLine,               // k = 0, b = 0
  Euclidean,                 // k = 0, b != 0
  PseudoHyperbolicZero,      // k < 0, no isolated stationary point, exp warp
  PseudoHyperbolicNegative,  // k < 0, no isolated stationary point, cosh warp
  PseudoHyperbolicUnresolved,
  Hyperbolic,                // k < 0, one isolated stationary point
  Spherical,                 // k > 0
  Indeterminate,
  NotApplicable  // classification skipped (e.g. non-umbilic control)
};

std::string to_string(TashiroCase c);

enum class StationaryEvidence { None, Isolated, Unknown };

std::string to_string(StationaryEvidence e);

/// Warped-metric profile of a catalog geometry; distinguishes the two
/// pseudo-hyperbolic types, which share (k, b) and stationary behaviour.
enum class WarpProfile { NotApplicable, ZeroType, NegativeType };

/// Values within 1e-6 of zero are treated as zero.
TashiroCase tashiro_classify(double k, double b, StationaryEvidence evidence,
                             WarpProfile profile = WarpProfile::NotApplicable);

enum class OdeCase { IA, IB, IIA0, IIAminus, IIB, III };

/// Tabulated closed-form solutions of rho'' + k rho = b:
/// IA: a s; IB: b s^2/2 + a; IIA0: a e^{cs} - b/c^2;
/// IIAminus: a sinh(cs) - b/c^2; IIB: a cosh(cs) - b/c^2;
/// III: a cos(cs) + b/c^2.
double concircular_solution(OdeCase ode_case, double a, double b, double c,
                            double s);

/// Grid scan of |grad C| over the chart domain. Cells below 1e-6 count as
/// stationary; Isolated when all such cells are singletons under grid
/// adjacency; Unknown when the minimum lands in the inconclusive band
/// (1e-6, 1e-3).
StationaryEvidence stationary_scan(const Chart& chart, const ConformalField& f,
                                   int grid_per_dim);

}  // namespace soliform
