#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <utility>

#include "soliform/jet.hpp"

namespace soliform {

using JetVec = Eigen::Matrix<Jet3, Eigen::Dynamic, 1>;

/// Open axis-aligned box in parameter space.
struct Box {
  Eigen::VectorXd lo, hi;

  int dim() const { return static_cast<int>(lo.size()); }

  bool contains(const Eigen::VectorXd& u, double margin = 0.0) const {
    if (u.size() != lo.size()) return false;
    for (Eigen::Index i = 0; i < u.size(); ++i)
      if (u[i] <= lo[i] + margin || u[i] >= hi[i] - margin) return false;
    return true;
  }

  static Box cube(int n, double lo_v, double hi_v) {
    return Box{Eigen::VectorXd::Constant(n, lo_v),
               Eigen::VectorXd::Constant(n, hi_v)};
  }
};

/// A differentiable map from an open box in R^n to R^m, evaluable both on
/// plain doubles and on Jet3 scalars. Construct it from a single generic
/// callable `f(const Eigen::Matrix<S,Dynamic,1>&) -> Eigen::Matrix<S,Dynamic,1>`;
/// both evaluation paths are instantiated from the same expression, so the
/// jet value slot reproduces the plain evaluation bit for bit.
class SmoothMap {
 public:
  template <typename F>
  SmoothMap(int in_dim, int out_dim, Box domain, F f)
      : in_(in_dim),
        out_(out_dim),
        domain_(std::move(domain)),
        value_fn_([f](const Eigen::VectorXd& u) { return f(u); }),
        jet_fn_([f](const JetVec& u) { return f(u); }) {
    if (domain_.dim() != in_)
      throw std::invalid_argument("SmoothMap: domain dimension mismatch");
  }

  int in_dim() const { return in_; }
  int out_dim() const { return out_; }
  const Box& domain() const { return domain_; }

  Eigen::VectorXd value(const Eigen::VectorXd& u) const {
    require_inside(u);
    Eigen::VectorXd y = value_fn_(u);
    check_out(y.size());
    return y;
  }

  /// Jets of all out_dim components at u, seeded on the in_dim parameters.
  JetVec jets(const Eigen::VectorXd& u) const {
    require_inside(u);
    JetVec seed(in_);
    for (int i = 0; i < in_; ++i) seed[i] = Jet3::variable(in_, i, u[i]);
    JetVec y = jet_fn_(seed);
    check_out(y.size());
    return y;
  }

  /// Raw jet evaluation on caller-supplied jets (used for composition);
  /// the value slots must lie inside the domain.
  JetVec jets_raw(const JetVec& u) const {
    Eigen::VectorXd uv(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) uv[i] = u[i].value();
    require_inside(uv);
    JetVec y = jet_fn_(u);
    check_out(y.size());
    return y;
  }

 private:
  void require_inside(const Eigen::VectorXd& u) const {
    if (u.size() != in_)
      throw std::invalid_argument("SmoothMap: parameter dimension mismatch");
    if (!domain_.contains(u))
      throw std::invalid_argument("SmoothMap: point outside domain box");
  }

  void check_out(Eigen::Index got) const {
    if (got != out_)
      throw std::invalid_argument("SmoothMap: callable output size mismatch");
  }

  int in_, out_;
  Box domain_;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> value_fn_;
  std::function<JetVec(const JetVec&)> jet_fn_;
};

inline JetVec jet_eval(const SmoothMap& f, const Eigen::VectorXd& u) {
  return f.jets(u);
}

/// outer after inner; jets propagate through both maps by the chain rule
/// built into the jet arithmetic.
SmoothMap compose(const SmoothMap& outer, const SmoothMap& inner);

/// Maximum absolute deviation between the jet derivatives of the given
/// order and a central finite-difference evaluation of f. Steps: 1e-5
/// (order 1), 1e-4 (order 2), 5e-3 (order 3).
double fd_check(const SmoothMap& f, const Eigen::VectorXd& u, int order);

}  // namespace soliform
