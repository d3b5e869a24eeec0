#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "soliform/signature.hpp"

namespace soliform {

/// Truncated multivariate Taylor scalar carrying exact partial derivatives
/// to order 3 with respect to a fixed set of n parameters.
///
/// d2 is stored as a full symmetric matrix and d3 as a flat n^3 array;
/// every arithmetic rule computes a unique representative for each index
/// multiset and writes all permutations, so the symmetry of the stored
/// derivatives is exact, not approximate.
///
/// Arithmetic with plain doubles never touches the variable count, so
/// constants can be mixed in freely. Binary operations between two jets
/// require matching variable counts.
class Jet3 {
 public:
  Jet3() = default;

  static Jet3 constant(int nvars, double v) {
    Jet3 j;
    j.resize(nvars);
    j.v_ = v;
    return j;
  }

  /// Seed for the i-th of nvars independent variables.
  static Jet3 variable(int nvars, int i, double v) {
    Jet3 j = constant(nvars, v);
    j.g_[i] = 1.0;
    return j;
  }

  int vars() const { return static_cast<int>(g_.size()); }
  double value() const { return v_; }
  const Eigen::VectorXd& d1() const { return g_; }
  const Eigen::MatrixXd& d2() const { return h_; }
  double d3(int i, int j, int k) const { return t_[flat(i, j, k)]; }

  Jet3 operator-() const {
    Jet3 r = *this;
    r.v_ = -r.v_;
    r.g_ = -r.g_;
    r.h_ = -r.h_;
    r.t_ = -r.t_;
    return r;
  }

  friend Jet3 operator+(const Jet3& a, const Jet3& b) {
    check_same(a, b);
    Jet3 r = a;
    r.v_ += b.v_;
    r.g_ += b.g_;
    r.h_ += b.h_;
    r.t_ += b.t_;
    return r;
  }

  friend Jet3 operator-(const Jet3& a, const Jet3& b) {
    check_same(a, b);
    Jet3 r = a;
    r.v_ -= b.v_;
    r.g_ -= b.g_;
    r.h_ -= b.h_;
    r.t_ -= b.t_;
    return r;
  }

  friend Jet3 operator*(const Jet3& a, const Jet3& b) {
    check_same(a, b);
    const int n = a.vars();
    Jet3 r;
    r.resize(n);
    r.v_ = a.v_ * b.v_;
    r.g_ = a.v_ * b.g_ + b.v_ * a.g_;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double hij = a.h_(i, j) * b.v_ + a.v_ * b.h_(i, j) +
                           a.g_[i] * b.g_[j] + a.g_[j] * b.g_[i];
        r.h_(i, j) = hij;
        r.h_(j, i) = hij;
      }
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) {
          const double tijk =
              a.d3(i, j, k) * b.v_ + a.v_ * b.d3(i, j, k) +
              a.h_(i, j) * b.g_[k] + a.h_(i, k) * b.g_[j] +
              a.h_(j, k) * b.g_[i] + b.h_(i, j) * a.g_[k] +
              b.h_(i, k) * a.g_[j] + b.h_(j, k) * a.g_[i];
          r.set3(i, j, k, tijk);
        }
    return r;
  }

  // Quotient rule solved for the quotient's derivatives; the value slot is
  // the plain division, keeping jet values bit-identical to double
  // evaluation.
  friend Jet3 operator/(const Jet3& a, const Jet3& b) {
    check_same(a, b);
    const int n = a.vars();
    if (!std::isfinite(a.v_ / b.v_))
      throw NumericalError("Jet3: non-finite quotient");
    Jet3 q;
    q.resize(n);
    q.v_ = a.v_ / b.v_;
    for (int i = 0; i < n; ++i)
      q.g_[i] = (a.g_[i] - q.v_ * b.g_[i]) / b.v_;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double hij = (a.h_(i, j) - q.g_[i] * b.g_[j] -
                            q.g_[j] * b.g_[i] - q.v_ * b.h_(i, j)) /
                           b.v_;
        q.h_(i, j) = hij;
        q.h_(j, i) = hij;
      }
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) {
          const double tijk =
              (a.d3(i, j, k) - q.h_(i, j) * b.g_[k] - q.h_(i, k) * b.g_[j] -
               q.h_(j, k) * b.g_[i] - q.g_[i] * b.h_(j, k) -
               q.g_[j] * b.h_(i, k) - q.g_[k] * b.h_(i, j) -
               q.v_ * b.d3(i, j, k)) /
              b.v_;
          q.set3(i, j, k, tijk);
        }
    return q;
  }

  friend Jet3 operator+(const Jet3& a, double c) {
    Jet3 r = a;
    r.v_ += c;
    return r;
  }
  friend Jet3 operator+(double c, const Jet3& a) { return a + c; }
  friend Jet3 operator-(const Jet3& a, double c) { return a + (-c); }
  friend Jet3 operator-(double c, const Jet3& a) { return (-a) + c; }

  friend Jet3 operator*(const Jet3& a, double c) {
    Jet3 r = a;
    r.v_ *= c;
    r.g_ *= c;
    r.h_ *= c;
    r.t_ *= c;
    return r;
  }
  friend Jet3 operator*(double c, const Jet3& a) { return a * c; }
  friend Jet3 operator/(const Jet3& a, double c) {
    Jet3 r = a;
    r.v_ /= c;
    r.g_ /= c;
    r.h_ /= c;
    r.t_ /= c;
    return r;
  }
  friend Jet3 operator/(double c, const Jet3& a) {
    const double x = a.value();
    return a.apply(c / x, -c / (x * x), 2.0 * c / (x * x * x),
                   -6.0 * c / (x * x * x * x));
  }

  Jet3& operator+=(const Jet3& b) { return *this = *this + b; }
  Jet3& operator-=(const Jet3& b) { return *this = *this - b; }
  Jet3& operator*=(const Jet3& b) { return *this = *this * b; }

  /// Chain rule through a scalar function given its value and first three
  /// derivatives at this jet's value slot.
  Jet3 apply(double f0, double f1, double f2, double f3) const {
    if (!std::isfinite(f0) || !std::isfinite(f1) || !std::isfinite(f2) ||
        !std::isfinite(f3))
      throw NumericalError("Jet3: non-finite intermediate value");
    const int n = vars();
    Jet3 r;
    r.resize(n);
    r.v_ = f0;
    r.g_ = f1 * g_;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double hij = f2 * g_[i] * g_[j] + f1 * h_(i, j);
        r.h_(i, j) = hij;
        r.h_(j, i) = hij;
      }
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) {
          const double tijk =
              f3 * g_[i] * g_[j] * g_[k] +
              f2 * (h_(i, j) * g_[k] + h_(i, k) * g_[j] + h_(j, k) * g_[i]) +
              f1 * d3(i, j, k);
          r.set3(i, j, k, tijk);
        }
    return r;
  }

  Jet3 reciprocal() const {
    const double x = v_;
    return apply(1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x),
                 -6.0 / (x * x * x * x));
  }

 private:
  void resize(int n) {
    g_ = Eigen::VectorXd::Zero(n);
    h_ = Eigen::MatrixXd::Zero(n, n);
    t_ = Eigen::VectorXd::Zero(n * n * n);
  }

  int flat(int i, int j, int k) const {
    const int n = vars();
    return (i * n + j) * n + k;
  }

  void set3(int i, int j, int k, double val) {
    t_[flat(i, j, k)] = val;
    t_[flat(i, k, j)] = val;
    t_[flat(j, i, k)] = val;
    t_[flat(j, k, i)] = val;
    t_[flat(k, i, j)] = val;
    t_[flat(k, j, i)] = val;
  }

  static void check_same(const Jet3& a, const Jet3& b) {
    if (a.vars() != b.vars())
      throw std::invalid_argument("Jet3: variable count mismatch");
  }

  double v_ = 0.0;
  Eigen::VectorXd g_;
  Eigen::MatrixXd h_;
  Eigen::VectorXd t_;
};

inline Jet3 exp(const Jet3& a) {
  const double e = std::exp(a.value());
  return a.apply(e, e, e, e);
}

inline Jet3 log(const Jet3& a) {
  const double x = a.value();
  return a.apply(std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x));
}

inline Jet3 sin(const Jet3& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.apply(s, c, -s, -c);
}

inline Jet3 cos(const Jet3& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.apply(c, -s, -c, s);
}

inline Jet3 sinh(const Jet3& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.apply(s, c, s, c);
}

inline Jet3 cosh(const Jet3& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.apply(c, s, c, s);
}

inline Jet3 sqrt(const Jet3& a) {
  const double x = a.value();
  const double r = std::sqrt(x);
  return a.apply(r, 0.5 / r, -0.25 / (r * x), 0.375 / (r * x * x));
}

inline Jet3 pow(const Jet3& a, double p) {
  const double x = a.value();
  return a.apply(std::pow(x, p), p * std::pow(x, p - 1.0),
                 p * (p - 1.0) * std::pow(x, p - 2.0),
                 p * (p - 1.0) * (p - 2.0) * std::pow(x, p - 3.0));
}

}  // namespace soliform

namespace Eigen {

/// Enough of NumTraits for dense vectors/matrices of jets.
template <>
struct NumTraits<soliform::Jet3> : GenericNumTraits<soliform::Jet3> {
  typedef soliform::Jet3 Real;
  typedef soliform::Jet3 NonInteger;
  typedef soliform::Jet3 Nested;
  typedef double Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 9,
    MulCost = 27
  };
};

}  // namespace Eigen
