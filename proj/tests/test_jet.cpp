#include <doctest.h>

#include <cmath>

#include "soliform/rng.hpp"
#include "soliform/smooth_map.hpp"

using namespace soliform;

namespace {

template <typename S>
using VecS = Eigen::Matrix<S, Eigen::Dynamic, 1>;

SmoothMap square_map() {
  return SmoothMap(1, 1, Box::cube(1, -10, 10), [](const auto& u) {
    using V = std::decay_t<decltype(u)>;
    V y(1);
    y[0] = u[0] * u[0];
    return y;
  });
}

}  // namespace

TEST_CASE("jet of u^2") {
  const auto jets = jet_eval(square_map(), Eigen::VectorXd::Constant(1, 3.0));
  CHECK(jets[0].value() == 9.0);
  CHECK(jets[0].d1()[0] == 6.0);
  CHECK(jets[0].d2()(0, 0) == 2.0);
  CHECK(jets[0].d3(0, 0, 0) == 0.0);
}

TEST_CASE("jet of sin(u)*v") {
  SmoothMap f(2, 1, Box::cube(2, -10, 10), [](const auto& u) {
    using V = std::decay_t<decltype(u)>;
    using std::sin;
    V y(1);
    y[0] = sin(u[0]) * u[1];
    return y;
  });
  Eigen::VectorXd u(2);
  u << 0.0, 2.0;
  const auto jets = jet_eval(f, u);
  CHECK(jets[0].value() == 0.0);
  CHECK(jets[0].d1()[0] == 2.0);
  CHECK(jets[0].d1()[1] == 0.0);
  CHECK(jets[0].d2()(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(jets[0].d2()(0, 1) == jets[0].d2()(1, 0));  // exact symmetry
}

TEST_CASE("jet of exp reproduces itself and matches finite differences") {
  SmoothMap f(1, 1, Box::cube(1, -2, 2), [](const auto& u) {
    using V = std::decay_t<decltype(u)>;
    using std::exp;
    V y(1);
    y[0] = exp(u[0]);
    return y;
  });
  const Eigen::VectorXd u = Eigen::VectorXd::Constant(1, 0.5);
  const auto jets = jet_eval(f, u);
  const double e = std::exp(0.5);
  CHECK(jets[0].value() == e);
  CHECK(jets[0].d1()[0] == doctest::Approx(e).epsilon(1e-15));
  CHECK(jets[0].d2()(0, 0) == doctest::Approx(e).epsilon(1e-15));
  CHECK(jets[0].d3(0, 0, 0) == doctest::Approx(e).epsilon(1e-15));
  CHECK(fd_check(f, u, 1) <= 1e-6);
  CHECK(fd_check(f, u, 2) <= 1e-6);
  CHECK(fd_check(f, u, 3) <= 1e-4);
}

TEST_CASE("finite differences are exact on cubics") {
  SmoothMap f(2, 1, Box::cube(2, -3, 3), [](const auto& u) {
    using V = std::decay_t<decltype(u)>;
    V y(1);
    y[0] = u[0] * u[0] * u[0] - 2.0 * u[0] * u[1] * u[1] + 0.5 * u[1] + 1.0;
    return y;
  });
  Eigen::VectorXd u(2);
  u << 0.4, -0.7;
  CHECK(fd_check(f, u, 3) <= 1e-6);
}

TEST_CASE("jet value slot equals plain evaluation bit for bit") {
  SmoothMap f(2, 3, Box::cube(2, -2, 2), [](const auto& u) {
    using V = std::decay_t<decltype(u)>;
    using std::cos;
    using std::exp;
    using std::sin;
    using std::sqrt;
    V y(3);
    y[0] = sin(u[0]) * cos(u[1]);
    y[1] = exp(u[0] * 0.3) / (2.0 + u[1]);
    y[2] = sqrt(u[0] * u[0] + u[1] * u[1] + 1.0);
    return y;
  });
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    Eigen::VectorXd u(2);
    u << rng.uniform(-1.9, 1.9), rng.uniform(-1.9, 1.9);
    const Eigen::VectorXd plain = f.value(u);
    const auto jets = f.jets(u);
    for (int a = 0; a < 3; ++a) CHECK(jets[a].value() == plain[a]);
  }
}

TEST_CASE("jet symmetry is exact for transcendental compositions") {
  SmoothMap f(3, 1, Box::cube(3, 0.1, 2.0), [](const auto& u) {
    using V = std::decay_t<decltype(u)>;
    using std::cosh;
    using std::log;
    using std::sinh;
    V y(1);
    y[0] = sinh(u[0] * u[1]) * log(u[2]) + cosh(u[1]) / (u[0] + 2.0);
    return y;
  });
  Eigen::VectorXd u(3);
  u << 0.7, 1.1, 1.6;
  const auto jets = f.jets(u);
  const Jet3& j = jets[0];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(j.d2()(a, b) == j.d2()(b, a));
      for (int c = 0; c < 3; ++c) {
        CHECK(j.d3(a, b, c) == j.d3(b, a, c));
        CHECK(j.d3(a, b, c) == j.d3(a, c, b));
        CHECK(j.d3(a, b, c) == j.d3(c, b, a));
      }
    }
  CHECK(fd_check(f, u, 2) <= 1e-6);
  CHECK(fd_check(f, u, 3) <= 1e-4);
}

TEST_CASE("chain rule: composed maps agree with inlined composites") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
    const double c = rng.uniform(-1, 1), d = rng.uniform(0.2, 0.8);
    SmoothMap h(2, 2, Box::cube(2, -1.5, 1.5), [a, b](const auto& u) {
      using V = std::decay_t<decltype(u)>;
      using std::cos;
      using std::sin;
      V y(2);
      y[0] = a * sin(u[0]) + b * u[0] * u[1];
      y[1] = cos(u[1]) * 0.5 + u[0] * u[0] * a;
      return y;
    });
    SmoothMap g(2, 1, Box::cube(2, -50, 50), [c, d](const auto& u) {
      using V = std::decay_t<decltype(u)>;
      using std::exp;
      V y(1);
      y[0] = c * u[0] * u[1] + exp(d * u[1]);
      return y;
    });
    SmoothMap direct(2, 1, Box::cube(2, -1.5, 1.5),
                     [a, b, c, d](const auto& u) {
                       using V = std::decay_t<decltype(u)>;
                       using std::cos;
                       using std::exp;
                       using std::sin;
                       V mid(2);
                       mid[0] = a * sin(u[0]) + b * u[0] * u[1];
                       mid[1] = cos(u[1]) * 0.5 + u[0] * u[0] * a;
                       V y(1);
                       y[0] = c * mid[0] * mid[1] + exp(d * mid[1]);
                       return y;
                     });
    const SmoothMap composed = compose(g, h);
    Eigen::VectorXd u(2);
    u << rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4);
    const auto ja = composed.jets(u)[0];
    const auto jb = direct.jets(u)[0];
    CHECK(std::abs(ja.value() - jb.value()) <= 1e-10);
    CHECK((ja.d1() - jb.d1()).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((ja.d2() - jb.d2()).cwiseAbs().maxCoeff() <= 1e-10);
    double d3dev = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          d3dev = std::max(d3dev, std::abs(ja.d3(i, j, k) - jb.d3(i, j, k)));
    CHECK(d3dev <= 1e-8);
  }
}

TEST_CASE("evaluation errors") {
  SmoothMap f(1, 1, Box::cube(1, -1, 1), [](const auto& u) {
    using V = std::decay_t<decltype(u)>;
    using std::log;
    V y(1);
    y[0] = log(u[0]);
    return y;
  });
  CHECK_THROWS_AS(f.value(Eigen::VectorXd::Constant(1, 5.0)),
                  std::invalid_argument);  // outside domain
  CHECK_THROWS_AS(f.jets(Eigen::VectorXd::Constant(1, -0.5)), NumericalError);
  CHECK_THROWS_AS(fd_check(f, Eigen::VectorXd::Constant(1, 0.9999), 2),
                  std::invalid_argument);  // margin violated
}
