#pragma once

#include <Eigen/Dense>
#include <vector>

#include "soliform/signature.hpp"
#include "soliform/smooth_map.hpp"

namespace soliform {

/// Deterministic rule selecting the sign of the unit normal.
enum class NormalOrientation {
  /// Align with the container position vector (quadric-type hypersurfaces
  /// of a flat container).
  PositionVector,
  /// Positive last container component (graph-type charts).
  LastComponentPositive
};

/// Parametrization of a hypersurface: n parameters into an (n+1)- or
/// (n+2)-dimensional container, evaluable with derivatives to order 3.
struct Chart {
  SmoothMap map;
  AmbientSpace ambient;
  NormalOrientation orientation;

  int n() const { return map.in_dim(); }

  Chart(SmoothMap m, AmbientSpace a, NormalOrientation o)
      : map(std::move(m)), ambient(std::move(a)), orientation(o) {
    if (map.out_dim() != ambient.container_dim())
      throw std::invalid_argument("Chart: container dimension mismatch");
    if (map.in_dim() != ambient.dim() - 1)
      throw std::invalid_argument("Chart: not a hypersurface of the ambient");
  }
};

/// First/second-fundamental-form and connection data at one parameter
/// point, together with the exact parameter derivatives of each object
/// (propagated from the chart jets, not finite-differenced).
///
/// Index conventions: E.col(i) = d_i f;  A(i,j) = A^i_j (mixed, basis E);
/// Gamma[k](i,j) = Gamma^k_ij;  dg[k](i,j) = d_k g_ij;
/// d2g[l][k] = d_l d_k g;  dA[k](i,j) = d_k A^i_j;
/// dGamma[m][k](i,j) = d_m Gamma^k_ij;  dN.col(k) = d_k N.
struct FramePoint {
  Eigen::VectorXd u;
  Eigen::VectorXd x;
  std::vector<Jet3> jets;  // per container coordinate
  Eigen::MatrixXd E;
  Eigen::MatrixXd g, g_inv;
  std::vector<Eigen::MatrixXd> dg;
  std::vector<std::vector<Eigen::MatrixXd>> d2g;
  Eigen::VectorXd N;
  double eps_N = 1.0;
  Eigen::MatrixXd dN;
  Eigen::MatrixXd A;
  std::vector<Eigen::MatrixXd> dA;
  double H = 0.0;
  std::vector<Eigen::MatrixXd> Gamma;
  std::vector<std::vector<Eigen::MatrixXd>> dGamma;

  int n() const { return static_cast<int>(g.rows()); }

  /// Weingarten operator as a symmetrized (0,2) form g(A.,.).
  Eigen::MatrixXd a_bilinear() const {
    Eigen::MatrixXd ga = g * A;
    return 0.5 * (ga + ga.transpose());
  }

  /// Bilinear form of A^2.
  Eigen::MatrixXd a2_bilinear() const {
    Eigen::MatrixXd ga = g * A * A;
    return 0.5 * (ga + ga.transpose());
  }

  /// Components of a (0,2) tensor in a g-orthonormalized basis.
  Eigen::MatrixXd whiten_form(const Eigen::MatrixXd& T) const;
  /// Components of a tangent vector (given in basis E) in the same basis.
  Eigen::VectorXd whiten_vector(const Eigen::VectorXd& v) const;
  /// Mixed-index operator in the orthonormalized basis.
  Eigen::MatrixXd whiten_operator(const Eigen::MatrixXd& op) const;
};

FramePoint frame_at(const Chart& chart, const Eigen::VectorXd& u);

struct RicciData {
  Eigen::MatrixXd ric;  // lower indices
  double scalar = 0.0;
};

RicciData ricci_at(const Chart& chart, const Eigen::VectorXd& u);
RicciData ricci_of(const FramePoint& fp);

/// Sampled value and first parameter derivatives of a tangent vector field
/// given by components in the chart basis: dcomp(k, i) = d_k W^i.
struct TangentFieldSample {
  Eigen::VectorXd comp;
  Eigen::MatrixXd dcomp;
};

using TangentField = std::function<TangentFieldSample(const Eigen::VectorXd&)>;

/// Adapter: components supplied as a SmoothMap on the parameters.
TangentField tangent_field_from_map(const SmoothMap& W);

Eigen::VectorXd gradient_at(const Chart& chart, const SmoothMap& phi,
                            const Eigen::VectorXd& u);
Eigen::VectorXd gradient_of(const FramePoint& fp, const Jet3& phi);

Eigen::MatrixXd hessian_scalar_at(const Chart& chart, const SmoothMap& phi,
                                  const Eigen::VectorXd& u);
Eigen::MatrixXd hessian_scalar_of(const FramePoint& fp, const Jet3& phi);

Eigen::MatrixXd lie_metric_at(const Chart& chart, const TangentField& W,
                              const Eigen::VectorXd& u);
Eigen::MatrixXd lie_metric_of(const FramePoint& fp,
                              const TangentFieldSample& W);

/// (nabla_V A) as a mixed-index operator, V given by components in basis E.
Eigen::MatrixXd covariant_weingarten_at(const Chart& chart,
                                        const Eigen::VectorXd& u,
                                        const Eigen::VectorXd& V);
Eigen::MatrixXd covariant_weingarten_of(const FramePoint& fp,
                                        const Eigen::VectorXd& V);

/// max over basis pairs of |(nabla_i A)E_j - (nabla_j A)E_i| in
/// orthonormalized components; vanishes for constant-curvature ambients.
double codazzi_residual_at(const Chart& chart, const Eigen::VectorXd& u);
double codazzi_residual_of(const FramePoint& fp);

struct UmbilicityReport {
  bool is_umbilic = false;
  double H = 0.0;
  double deviation = 0.0;
};

UmbilicityReport umbilicity_at(const Chart& chart, const Eigen::VectorXd& u);
UmbilicityReport umbilicity_of(const FramePoint& fp);

inline constexpr double kUmbilicTol = 1e-8;

}  // namespace soliform
