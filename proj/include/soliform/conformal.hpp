#pragma once

#include <Eigen/Dense>

#include "soliform/hypersurface.hpp"
#include "soliform/rng.hpp"
#include "soliform/signature.hpp"

namespace soliform {

/// Parameter bundle generating a conformal vector field on the ambient
/// space.
///
/// Flat:    V(x) = sigma(x) x - (1/2) <x,x> a + B x + (1/2) gamma,
///          sigma(x) = <a,x> + beta,
/// where <.,.> is the signature inner product, so <a,x> is the height
/// function of the stored direction vector a.
///
/// Quadric: V(x) = -eps_q <x,gamma> x + B x + gamma,
///          sigma(x) = -eps_q <gamma,x>;
/// the family is generated by gamma and B only (a = 0, beta = 0).
///
/// B must satisfy eps_j b_jk + eps_k b_kj = 0, b_ii = 0, the matrix form
/// of <Bu,v> + <u,Bv> = 0.
class ConformalField {
 public:
  ConformalField(AmbientSpace ambient, Eigen::VectorXd a, double beta,
                 Eigen::MatrixXd B, Eigen::VectorXd gamma);

  /// Field with only some parts; the rest zeroed.
  static ConformalField dilation(const AmbientSpace& amb, double beta);
  static ConformalField translation(const AmbientSpace& amb,
                                    const Eigen::VectorXd& gamma_half);
  static ConformalField quadric_height(const AmbientSpace& amb,
                                       const Eigen::VectorXd& gamma);

  const AmbientSpace& ambient() const { return ambient_; }
  const Eigen::VectorXd& a() const { return a_; }
  double beta() const { return beta_; }
  const Eigen::MatrixXd& B() const { return B_; }
  const Eigen::VectorXd& gamma() const { return gamma_; }

 private:
  AmbientSpace ambient_;
  Eigen::VectorXd a_;
  double beta_;
  Eigen::MatrixXd B_;
  Eigen::VectorXd gamma_;
};

double sigma_at(const ConformalField& f, const Eigen::VectorXd& x);

Eigen::VectorXd eval_field(const ConformalField& f, const Eigen::VectorXd& x);

/// Plain container-coordinate directional derivative of the field formula.
Eigen::VectorXd field_derivative_flat(const ConformalField& f,
                                      const Eigen::VectorXd& x,
                                      const Eigen::VectorXd& w);

/// Second container derivative of the field formula.
Eigen::VectorXd field_second_derivative_flat(const ConformalField& f,
                                             const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& w1,
                                             const Eigen::VectorXd& w2);

/// Ambient covariant derivative: flat derivative, tangent-projected when
/// the ambient is a quadric.
Eigen::VectorXd field_ambient_derivative(const ConformalField& f,
                                         const Eigen::VectorXd& x,
                                         const Eigen::VectorXd& w);

/// Ambient derivative of sigma in the direction w.
double sigma_derivative(const ConformalField& f, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& w);

/// max over `probes` random probe pairs (X,Y) of
/// |<D_X V, Y> + <D_Y V, X> - 2 sigma <X,Y>| at x. Probes are tangent to
/// the quadric when the ambient is one.
double conformality_residual(const ConformalField& f, const Eigen::VectorXd& x,
                             int probes, Rng& rng);

/// Residual of Hess sigma = -c sigma g on the ambient (flat: the Hessian
/// itself, which must vanish; quadric: intrinsic Hessian via the projected
/// gradient field).
double sigma_hessian_residual(const ConformalField& f,
                              const Eigen::VectorXd& x, int probes, Rng& rng);

/// Splitting of the field along a hypersurface at one point: tangential
/// components in the chart basis, angle function C = <V,N>, and the
/// restricted conformal factor.
struct SplitSample {
  Eigen::VectorXd V;          // components in basis E
  double C = 0.0;             // <V, N>
  double sigma_restricted = 0.0;
  double reconstruction_residual = 0.0;  // |V_amb - (V^i E_i + eps_N C N)|
};

SplitSample split_at(const Chart& chart, const ConformalField& f,
                     const Eigen::VectorXd& u);
SplitSample split_of(const FramePoint& fp, const ConformalField& f);

/// The tangential part of the field as a differentiable tangent field on
/// the chart (components and their exact first parameter derivatives).
TangentField split_tangent_field(const Chart& chart, const ConformalField& f);

/// Same data computed from an already-built frame.
TangentFieldSample split_tangent_sample_of(const FramePoint& fp,
                                           const ConformalField& f);

/// Angle-function data at one point: C, its gradient (components in basis
/// E) and its Hessian as a (0,2) tensor, plus the ambient quantities that
/// enter the concircular constants.
struct AngleData {
  double C = 0.0;
  Eigen::VectorXd grad_C;   // components in basis E
  Eigen::MatrixXd hess_C;   // lower indices
  double sigma = 0.0;       // sigma restricted
  double N_sigma = 0.0;     // ambient derivative of sigma along N
};

AngleData angle_data_of(const FramePoint& fp, const ConformalField& f);

}  // namespace soliform
