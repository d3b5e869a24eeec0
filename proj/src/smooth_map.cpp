#include "soliform/smooth_map.hpp"

#include <cmath>

namespace soliform {

SmoothMap compose(const SmoothMap& outer, const SmoothMap& inner) {
  if (inner.out_dim() != outer.in_dim())
    throw std::invalid_argument("compose: dimension mismatch");
  SmoothMap o = outer, i = inner;
  return SmoothMap(inner.in_dim(), outer.out_dim(), inner.domain(),
                   [o, i](const auto& u) {
                     using V = std::decay_t<decltype(u)>;
                     if constexpr (std::is_same_v<V, Eigen::VectorXd>)
                       return o.value(i.value(u));
                     else
                       return o.jets_raw(i.jets_raw(u));
                   });
}

namespace {

constexpr double kStep1 = 1e-5;
constexpr double kStep2 = 1e-4;
constexpr double kStep3 = 5e-3;

Eigen::VectorXd shifted_eval(const SmoothMap& f, Eigen::VectorXd u) {
  return f.value(u);
}

}  // namespace

double fd_check(const SmoothMap& f, const Eigen::VectorXd& u, int order) {
  if (order < 1 || order > 3)
    throw std::invalid_argument("fd_check: order must be 1, 2 or 3");
  const double h = order == 1 ? kStep1 : order == 2 ? kStep2 : kStep3;
  if (!f.domain().contains(u, 2.0 * h))
    throw std::invalid_argument("fd_check: domain margin violated");

  const int n = f.in_dim();
  const int m = f.out_dim();
  const JetVec jets = f.jets(u);

  auto at = [&](const Eigen::VectorXd& du) {
    return shifted_eval(f, u + du);
  };
  auto e = [&](int i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v[i] = 1.0;
    return v;
  };

  double dev = 0.0;
  if (order == 1) {
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd d = (at(h * e(i)) - at(-h * e(i))) / (2.0 * h);
      for (int a = 0; a < m; ++a)
        dev = std::max(dev, std::abs(d[a] - jets[a].d1()[i]));
    }
  } else if (order == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Eigen::VectorXd d;
        if (i == j) {
          d = (at(h * e(i)) - 2.0 * at(Eigen::VectorXd::Zero(n)) +
               at(-h * e(i))) /
              (h * h);
        } else {
          d = (at(h * (e(i) + e(j))) - at(h * (e(i) - e(j))) -
               at(h * (e(j) - e(i))) + at(-h * (e(i) + e(j)))) /
              (4.0 * h * h);
        }
        for (int a = 0; a < m; ++a)
          dev = std::max(dev, std::abs(d[a] - jets[a].d2()(i, j)));
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) {
          Eigen::VectorXd d;
          if (i == j && j == k) {
            d = (at(2.0 * h * e(i)) - 2.0 * at(h * e(i)) + 2.0 * at(-h * e(i)) -
                 at(-2.0 * h * e(i))) /
                (2.0 * h * h * h);
          } else if (i == j || j == k) {
            // Pattern iij (or jkk after renaming): second difference in the
            // repeated index composed with a first difference in the other.
            const int rep = (i == j) ? i : k;
            const int oth = (i == j) ? k : i;
            auto second = [&](double shift_oth) -> Eigen::VectorXd {
              Eigen::VectorXd base = shift_oth * e(oth);
              return (at(base + h * e(rep)) - 2.0 * at(base) +
                      at(base - h * e(rep))) /
                     (h * h);
            };
            d = (second(h) - second(-h)) / (2.0 * h);
          } else {
            d = Eigen::VectorXd::Zero(m);
            for (int s1 : {-1, 1})
              for (int s2 : {-1, 1})
                for (int s3 : {-1, 1}) {
                  const double sign = s1 * s2 * s3;
                  d += sign * at(h * (s1 * e(i) + s2 * e(j) + s3 * e(k)));
                }
            d /= 8.0 * h * h * h;
          }
          for (int a = 0; a < m; ++a)
            dev = std::max(dev, std::abs(d[a] - jets[a].d3(i, j, k)));
        }
  }
  return dev;
}

}  // namespace soliform
