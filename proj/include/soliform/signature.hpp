#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace soliform {

/// Thrown when a geometric computation degenerates (singular metric,
/// null normal, non-finite intermediate).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Metric signature of a flat container space: an ordered list of signs
/// eps_i in {-1,+1}, all -1 entries leading. index() is the count of -1s.
class Signature {
 public:
  Signature() = default;

  explicit Signature(Eigen::VectorXd eps) : eps_(std::move(eps)) {
    bool seen_plus = false;
    for (Eigen::Index i = 0; i < eps_.size(); ++i) {
      if (eps_[i] != 1.0 && eps_[i] != -1.0)
        throw std::invalid_argument("Signature: entries must be +/-1");
      if (eps_[i] == 1.0) seen_plus = true;
      if (eps_[i] == -1.0 && seen_plus)
        throw std::invalid_argument("Signature: -1 entries must lead");
    }
  }

  static Signature euclidean(int dim) {
    return Signature(Eigen::VectorXd::Ones(dim));
  }

  static Signature lorentz(int dim) {
    Eigen::VectorXd e = Eigen::VectorXd::Ones(dim);
    e[0] = -1.0;
    return Signature(e);
  }

  int dim() const { return static_cast<int>(eps_.size()); }

  int index() const {
    int nu = 0;
    for (Eigen::Index i = 0; i < eps_.size(); ++i)
      if (eps_[i] < 0) ++nu;
    return nu;
  }

  double eps(int i) const { return eps_[i]; }
  const Eigen::VectorXd& eps_vector() const { return eps_; }

  bool operator==(const Signature& o) const { return eps_ == o.eps_; }

 private:
  Eigen::VectorXd eps_;
};

/// Signature-weighted inner product sum_i eps_i u_i v_i.
inline double inner(const Signature& sig, const Eigen::VectorXd& u,
                    const Eigen::VectorXd& v) {
  if (u.size() != sig.dim() || v.size() != sig.dim())
    throw std::invalid_argument("inner: dimension mismatch");
  return (sig.eps_vector().array() * u.array() * v.array()).sum();
}

/// Result of checking the constraint eps_j b_jk + eps_k b_kj = 0 (j != k),
/// b_ii = 0 on a candidate infinitesimal-isometry matrix.
struct ConformalMatrixCheck {
  bool valid = true;
  std::vector<std::pair<int, int>> violations;  // offending (j,k) pairs
};

inline ConformalMatrixCheck validate_conformal_matrix(
    const Signature& sig, const Eigen::MatrixXd& B, double tol = 0.0) {
  if (B.rows() != B.cols() || B.rows() != sig.dim())
    throw std::invalid_argument("validate_conformal_matrix: size mismatch");
  ConformalMatrixCheck out;
  const int m = sig.dim();
  for (int j = 0; j < m; ++j) {
    if (std::abs(B(j, j)) > tol) {
      out.valid = false;
      out.violations.emplace_back(j, j);
    }
    for (int k = j + 1; k < m; ++k) {
      if (std::abs(sig.eps(j) * B(j, k) + sig.eps(k) * B(k, j)) > tol) {
        out.valid = false;
        out.violations.emplace_back(j, k);
      }
    }
  }
  return out;
}

/// Quadric membership tolerance: catalog charts are exact up to rounding.
inline constexpr double kQuadricTol = 1e-9;

/// Orthogonal projection of w onto the tangent space of the quadric
/// inner(x,x) = eps_q at the point x. The quadric sign is read off x itself.
inline Eigen::VectorXd project_tangent(const Signature& sig,
                                       const Eigen::VectorXd& x,
                                       const Eigen::VectorXd& w) {
  const double xx = inner(sig, x, x);
  const double eps_q = xx >= 0.0 ? 1.0 : -1.0;
  if (std::abs(xx - eps_q) > kQuadricTol)
    throw std::invalid_argument(
        "project_tangent: point not on a unit quadric (inner(x,x)=" +
        std::to_string(xx) + ")");
  return w - eps_q * inner(sig, w, x) * x;
}

/// Ambient geometry: a flat semi-Euclidean container, or the unit quadric
/// inner(x,x) = eps_q inside one. Curvature c is 0 for flat, eps_q for the
/// quadric.
class AmbientSpace {
 public:
  enum class Kind { Flat, Quadric };

  static AmbientSpace flat(Signature sig) {
    return AmbientSpace(Kind::Flat, std::move(sig), 0, 0.0);
  }

  static AmbientSpace quadric(Signature sig, int eps_q) {
    if (eps_q != 1 && eps_q != -1)
      throw std::invalid_argument("AmbientSpace: quadric sign must be +/-1");
    return AmbientSpace(Kind::Quadric, std::move(sig), eps_q,
                        static_cast<double>(eps_q));
  }

  Kind kind() const { return kind_; }
  const Signature& signature() const { return sig_; }
  /// Dimension of the container the coordinates live in.
  int container_dim() const { return sig_.dim(); }
  /// Dimension of the ambient manifold itself.
  int dim() const {
    return kind_ == Kind::Flat ? sig_.dim() : sig_.dim() - 1;
  }
  int quadric_sign() const { return eps_q_; }
  double curvature() const { return c_; }

  bool on_quadric(const Eigen::VectorXd& x, double tol = kQuadricTol) const {
    if (kind_ != Kind::Quadric) return true;
    return std::abs(inner(sig_, x, x) - eps_q_) <= tol;
  }

  void require_point(const Eigen::VectorXd& x) const {
    if (x.size() != container_dim())
      throw std::invalid_argument("AmbientSpace: point dimension mismatch");
    if (!on_quadric(x))
      throw std::invalid_argument("AmbientSpace: point not on quadric");
  }

  bool operator==(const AmbientSpace& o) const {
    return kind_ == o.kind_ && sig_ == o.sig_ && eps_q_ == o.eps_q_;
  }

 private:
  AmbientSpace(Kind k, Signature sig, int eps_q, double c)
      : kind_(k), sig_(std::move(sig)), eps_q_(eps_q), c_(c) {}

  Kind kind_ = Kind::Flat;
  Signature sig_;
  int eps_q_ = 0;
  double c_ = 0.0;
};

}  // namespace soliform
