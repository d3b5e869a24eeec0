#include "soliform/catalog.hpp"

#include <cmath>

namespace soliform {

namespace {

template <typename S>
using VecS = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Polar chart of the unit n-sphere; the cosine of the first angle sits in
// the last container slot, so n = 2 reads (sin t cos p, sin t sin p, cos t).
template <typename S>
VecS<S> sphere_polar(const VecS<S>& u) {
  using std::cos;
  using std::sin;
  const int n = static_cast<int>(u.size());
  VecS<S> x(n + 1);
  S p = cos(u[0]) * 0.0 + 1.0;  // scalar one of the right jet shape
  for (int k = n; k >= 2; --k) {
    x[k] = cos(u[n - k]) * p;
    p = p * sin(u[n - k]);
  }
  x[0] = p * cos(u[n - 1]);
  x[1] = p * sin(u[n - 1]);
  return x;
}

// Global graph chart of the upper hyperboloid sheet in Lorentz container
// coordinates (x0 timelike).
template <typename S>
VecS<S> hyperboloid_graph(const VecS<S>& z) {
  using std::sqrt;
  const int n = static_cast<int>(z.size());
  VecS<S> x(n + 1);
  S q = z[0] * z[0];
  for (int i = 1; i < n; ++i) q = q + z[i] * z[i];
  x[0] = sqrt(q + 1.0);
  for (int i = 0; i < n; ++i) x[i + 1] = z[i];
  return x;
}

// Horospherical chart: x0 + xn = e^t, x0 - xn = e^-t + e^t |z|^2,
// x_i = e^t z_i. Induced metric dt^2 + e^{2t} |dz|^2.
template <typename S>
VecS<S> pseudo_hyperbolic_zero_map(const VecS<S>& u) {
  using std::exp;
  const int n = static_cast<int>(u.size());
  VecS<S> x(n + 1);
  const S& t = u[0];
  S et = exp(t);
  S emt = exp(-t);
  S zz = et * 0.0;
  for (int i = 1; i < n; ++i) zz = zz + u[i] * u[i];
  x[0] = (et + emt + et * zz) * 0.5;
  for (int i = 1; i < n; ++i) x[i] = et * u[i];
  x[n] = (et - emt - et * zz) * 0.5;
  return x;
}

// x = (cosh t . y(v), sinh t) with y a hyperboloid chart of the fiber;
// induced metric dt^2 + cosh^2 t ds~^2.
template <typename S>
VecS<S> pseudo_hyperbolic_negative_map(const VecS<S>& u) {
  using std::cosh;
  using std::sinh;
  const int n = static_cast<int>(u.size());
  VecS<S> x(n + 1);
  const S& t = u[0];
  VecS<S> y;
  if (n == 2) {
    // unit-speed chart of H^1
    y.resize(2);
    y[0] = cosh(u[1]);
    y[1] = sinh(u[1]);
  } else {
    VecS<S> v(n - 1);
    for (int i = 0; i < n - 1; ++i) v[i] = u[i + 1];
    y = hyperboloid_graph(v);
  }
  for (int i = 0; i < n; ++i) x[i] = cosh(t) * y[i];
  x[n] = sinh(t);
  return x;
}

template <typename S>
VecS<S> latitude_sphere_map(const VecS<S>& u) {
  using std::cos;
  using std::sin;
  const int n = static_cast<int>(u.size());
  VecS<S> y = sphere_polar(u);
  VecS<S> x(n + 2);
  for (int i = 0; i <= n; ++i) x[i] = std::sin(kLatitudeRadius) * y[i];
  x[n + 1] = y[0] * 0.0 + std::cos(kLatitudeRadius);
  return x;
}

Box polar_box(int n) {
  Eigen::VectorXd lo(n), hi(n);
  for (int i = 0; i < n - 1; ++i) {
    lo[i] = 0.05;
    hi[i] = 3.14159265358979323846 - 0.05;
  }
  lo[n - 1] = 0.05;
  hi[n - 1] = 6.2;
  return Box{lo, hi};
}

Eigen::VectorXd unit_axis(int dim, int axis, double scale = 1.0) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v[axis] = scale;
  return v;
}

CatalogEntry make_flat_plane(int n) {
  const int m = n + 1;
  auto amb = AmbientSpace::flat(Signature::euclidean(m));
  SmoothMap map(n, m, Box::cube(n, -2.0, 2.0), [m](const auto& u) {
    using V = std::decay_t<decltype(u)>;
    V x(m);
    for (int i = 0; i < m - 1; ++i) x[i] = u[i];
    x[m - 1] = u[0] * 0.0;
    return x;
  });
  CatalogEntry e{
      "flat_plane",
      Chart(std::move(map), amb, NormalOrientation::LastComponentPositive),
      +1.0,
      0.0,
      0.0,
      0.0,
      TashiroCase::Euclidean,
      WarpProfile::NotApplicable,
      true,
      LambdaForm::SigmaRestricted,
      ConformalField(amb, unit_axis(m, m - 1), 0.25,
                     Eigen::MatrixXd::Zero(m, m), Eigen::VectorXd::Zero(m)),
      unit_axis(m, m - 1),
      21};
  return e;
}

CatalogEntry make_sphere(int n) {
  const int m = n + 1;
  auto amb = AmbientSpace::flat(Signature::euclidean(m));
  SmoothMap map(n, m, polar_box(n),
                [](const auto& u) { return sphere_polar(u); });
  CatalogEntry e{
      "sphere",
      Chart(std::move(map), amb, NormalOrientation::PositionVector),
      +1.0,
      -1.0,
      0.0,
      1.0,
      TashiroCase::Spherical,
      WarpProfile::NotApplicable,
      true,
      LambdaForm::QuadricHeight,
      ConformalField::translation(amb, unit_axis(m, m - 1, 2.0)),
      unit_axis(m, m - 1),
      21};
  return e;
}

CatalogEntry make_hyperbolic(int n) {
  const int m = n + 1;
  auto amb = AmbientSpace::flat(Signature::lorentz(m));
  SmoothMap map(n, m, Box::cube(n, -1.6, 1.6),
                [](const auto& u) { return hyperboloid_graph(u); });
  CatalogEntry e{
      "hyperbolic",
      Chart(std::move(map), amb, NormalOrientation::PositionVector),
      -1.0,
      +1.0,
      0.0,
      -1.0,
      TashiroCase::Hyperbolic,
      WarpProfile::NotApplicable,
      true,
      LambdaForm::QuadricHeight,
      ConformalField::translation(amb, unit_axis(m, 0, 2.0)),
      unit_axis(m, 0),
      n == 2 ? 21 : 9};
  return e;
}

CatalogEntry make_pseudo_hyperbolic_zero(int n) {
  const int m = n + 1;
  auto amb = AmbientSpace::flat(Signature::lorentz(m));
  Eigen::VectorXd lo(n), hi(n);
  lo[0] = -0.8;
  hi[0] = 0.8;
  for (int i = 1; i < n; ++i) {
    lo[i] = -1.0;
    hi[i] = 1.0;
  }
  SmoothMap map(n, m, Box{lo, hi},
                [](const auto& u) { return pseudo_hyperbolic_zero_map(u); });
  CatalogEntry e{
      "pseudo_hyperbolic_zero",
      Chart(std::move(map), amb, NormalOrientation::PositionVector),
      -1.0,
      +1.0,
      0.0,
      -1.0,
      TashiroCase::PseudoHyperbolicZero,
      WarpProfile::ZeroType,
      true,
      LambdaForm::WarpedHeight,
      ConformalField::translation(amb, unit_axis(m, 1, 2.0)),
      unit_axis(m, 1),
      n == 2 ? 21 : 9};
  return e;
}

CatalogEntry make_pseudo_hyperbolic_negative(int n) {
  const int m = n + 1;
  auto amb = AmbientSpace::flat(Signature::lorentz(m));
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(n, -1.0);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(n, 1.0);
  lo[0] = -0.9;
  hi[0] = 0.9;
  SmoothMap map(n, m, Box{lo, hi}, [](const auto& u) {
    return pseudo_hyperbolic_negative_map(u);
  });
  CatalogEntry e{
      "pseudo_hyperbolic_negative",
      Chart(std::move(map), amb, NormalOrientation::PositionVector),
      -1.0,
      +1.0,
      0.0,
      -1.0,
      TashiroCase::PseudoHyperbolicNegative,
      WarpProfile::NegativeType,
      true,
      LambdaForm::WarpedHeight,
      ConformalField::translation(amb, unit_axis(m, n, 2.0)),
      unit_axis(m, n),
      n == 2 ? 21 : 9};
  return e;
}

CatalogEntry make_latitude_sphere(int n) {
  const int m = n + 2;
  auto amb = AmbientSpace::quadric(Signature::euclidean(m), +1);
  SmoothMap map(n, m, polar_box(n),
                [](const auto& u) { return latitude_sphere_map(u); });
  const double cot = std::cos(kLatitudeRadius) / std::sin(kLatitudeRadius);
  CatalogEntry e{
      "latitude_sphere",
      Chart(std::move(map), amb, NormalOrientation::LastComponentPositive),
      +1.0,
      cot,
      1.0,
      1.0 + cot * cot,
      TashiroCase::Spherical,
      WarpProfile::NotApplicable,
      true,
      LambdaForm::None,
      ConformalField::quadric_height(amb, unit_axis(m, 0)),
      unit_axis(m, 0),
      21};
  return e;
}

CatalogEntry make_saddle_graph(int n) {
  if (n != 2)
    throw std::invalid_argument("get_entry: saddle_graph is only defined for n=2");
  auto amb = AmbientSpace::flat(Signature::euclidean(3));
  SmoothMap map(2, 3, Box::cube(2, -0.9, 0.9), [](const auto& u) {
    using V = std::decay_t<decltype(u)>;
    V x(3);
    x[0] = u[0];
    x[1] = u[1];
    x[2] = u[0] * u[0] - u[1] * u[1];
    return x;
  });
  CatalogEntry e{
      "saddle_graph",
      Chart(std::move(map), amb, NormalOrientation::LastComponentPositive),
      +1.0,
      std::nullopt,
      0.0,
      std::nullopt,
      TashiroCase::NotApplicable,
      WarpProfile::NotApplicable,
      false,
      LambdaForm::None,
      ConformalField::translation(amb, unit_axis(3, 2, 2.0)),
      unit_axis(3, 2),
      21};
  return e;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "flat_plane",
      "sphere",
      "hyperbolic",
      "pseudo_hyperbolic_zero",
      "pseudo_hyperbolic_negative",
      "latitude_sphere",
      "saddle_graph"};
  return names;
}

CatalogEntry get_entry(const std::string& name, int n) {
  if (n < 2) throw std::invalid_argument("get_entry: n must be >= 2");
  if (name == "flat_plane") return make_flat_plane(n);
  if (name == "sphere") return make_sphere(n);
  if (name == "hyperbolic") return make_hyperbolic(n);
  if (name == "pseudo_hyperbolic_zero") return make_pseudo_hyperbolic_zero(n);
  if (name == "pseudo_hyperbolic_negative")
    return make_pseudo_hyperbolic_negative(n);
  if (name == "latitude_sphere") return make_latitude_sphere(n);
  if (name == "saddle_graph") return make_saddle_graph(n);
  throw std::invalid_argument("get_entry: unknown catalog name '" + name + "'");
}

double expected_lambda(const CatalogEntry& entry, const Eigen::VectorXd& gamma,
                       const Eigen::VectorXd& u) {
  const int n = entry.chart.n();
  const Eigen::VectorXd x = entry.chart.map.value(u);
  const double h = inner(entry.chart.ambient.signature(), gamma, x);
  switch (entry.lambda_form) {
    case LambdaForm::QuadricHeight:
      return entry.eps_N * (n - 1 - h);
    case LambdaForm::WarpedHeight:
      return -(n - 1) + h;
    case LambdaForm::SigmaRestricted:
      throw std::invalid_argument(
          "expected_lambda: flat entry uses sigma restricted to the slice");
    case LambdaForm::None:
      break;
  }
  throw std::invalid_argument("expected_lambda: no closed form for entry '" +
                              entry.name + "'");
}

double isometry_residual(const Chart& chartA, const Chart& chartB,
                         const SmoothMap& map, const Eigen::VectorXd& u) {
  const FramePoint fa = frame_at(chartA, u);
  const JetVec mj = map.jets(u);
  Eigen::VectorXd v(map.out_dim());
  for (int b = 0; b < map.out_dim(); ++b) v[b] = mj[b].value();
  const FramePoint fb = frame_at(chartB, v);
  Eigen::MatrixXd J(map.out_dim(), map.in_dim());
  for (int b = 0; b < map.out_dim(); ++b)
    for (int i = 0; i < map.in_dim(); ++i) J(b, i) = mj[b].d1()[i];
  const Eigen::MatrixXd pulled = J.transpose() * fb.g * J;
  return (pulled - fa.g).cwiseAbs().maxCoeff();
}

}  // namespace soliform
