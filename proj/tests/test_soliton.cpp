#include <doctest.h>

#include <cmath>

#include "soliform/catalog.hpp"
#include "soliform/rng.hpp"
#include "soliform/soliton.hpp"

using namespace soliform;

namespace {

Eigen::VectorXd rand_point(const Box& b, Rng& rng) {
  Eigen::VectorXd u(b.dim());
  for (int d = 0; d < b.dim(); ++d)
    u[d] = rng.uniform(b.lo[d] + 1e-3, b.hi[d] - 1e-3);
  return u;
}

// wide polar chart reaching almost to the pole, for limit checks
Chart wide_sphere_chart() {
  Eigen::VectorXd lo(2), hi(2);
  lo << 1e-4, -3.0;
  hi << 3.1, 3.0;
  SmoothMap map(2, 3, Box{lo, hi}, [](const auto& u) {
    using V = std::decay_t<decltype(u)>;
    using std::cos;
    using std::sin;
    V x(3);
    x[0] = sin(u[0]) * cos(u[1]);
    x[1] = sin(u[0]) * sin(u[1]);
    x[2] = cos(u[0]);
    return x;
  });
  return Chart(std::move(map), AmbientSpace::flat(Signature::euclidean(3)),
               NormalOrientation::PositionVector);
}

ConformalField random_lorentz_field(int m, Rng& rng) {
  const auto amb = AmbientSpace::flat(Signature::lorentz(m));
  const Signature& sig = amb.signature();
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      B(j, k) = rng.uniform(-1, 1);
      B(k, j) = -sig.eps(j) * sig.eps(k) * B(j, k);
    }
  return ConformalField(amb, rng.normal_vector(m), rng.uniform(-1, 1), B,
                        rng.normal_vector(m));
}

}  // namespace

TEST_CASE("lambda extraction on the sphere") {
  const CatalogEntry e = get_entry("sphere", 2);
  const TangentField V = split_tangent_field(e.chart, e.demo_field);

  Eigen::VectorXd eq(2);
  eq << 1.5707963267948966, 0.4;
  CHECK(extract_lambda_at(e.chart, V, eq) ==
        doctest::Approx(1.0).epsilon(1e-10));

  // near the pole the height tends to 1 and lambda to 0
  const Chart wide = wide_sphere_chart();
  const auto amb = wide.ambient;
  Eigen::VectorXd g2(3);
  g2 << 0, 0, 2;
  const auto f = ConformalField::translation(amb, g2);
  const TangentField Vw = split_tangent_field(wide, f);
  Eigen::VectorXd near_pole(2);
  near_pole << 1e-3, 0.2;
  CHECK(std::abs(extract_lambda_at(wide, Vw, near_pole)) <= 1e-5);
}

TEST_CASE("flat slice: lambda equals the restricted conformal factor") {
  const CatalogEntry e = get_entry("flat_plane", 2);
  const auto amb = e.chart.ambient;
  const auto f = ConformalField::dilation(amb, 2.0);
  const TangentField V = split_tangent_field(e.chart, f);
  Eigen::VectorXd u(2);
  u << 0.7, -0.3;
  const double lam = extract_lambda_at(e.chart, V, u);
  CHECK(lam == doctest::Approx(2.0).epsilon(1e-13));
  const FramePoint fp = frame_at(e.chart, u);
  CHECK(std::abs(lam - sigma_at(f, fp.x)) <= 1e-12);
}

TEST_CASE("soliton residuals on the quadrics") {
  Rng rng(404);
  {
    const CatalogEntry e = get_entry("sphere", 2);
    const TangentField V = split_tangent_field(e.chart, e.demo_field);
    double dev = 0.0;
    for (int p = 0; p < 50; ++p) {
      const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
      const double lam = extract_lambda_at(e.chart, V, u);
      dev = std::max(dev, soliton_residual_at(e.chart, V, lam, u));
    }
    CHECK(dev <= 1e-8);

    // perturbing lambda by 0.1 moves the orthonormal residual by exactly 0.1
    Eigen::VectorXd u(2);
    u << 1.2, 0.4;
    const double lam = extract_lambda_at(e.chart, V, u);
    const double r0 = soliton_residual_at(e.chart, V, lam, u);
    const double r1 = soliton_residual_at(e.chart, V, lam + 0.1, u);
    CHECK(std::abs(r1 - 0.1) <= r0 + 1e-12);
  }
  {
    const CatalogEntry e = get_entry("hyperbolic", 2);
    const TangentField V = split_tangent_field(e.chart, e.demo_field);
    double dev = 0.0;
    for (int p = 0; p < 50; ++p) {
      const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
      // closed form: lambda = -(n-1) + h_gamma
      const double lam = expected_lambda(e, e.demo_gamma, u);
      dev = std::max(dev, soliton_residual_at(e.chart, V, lam, u));
    }
    CHECK(dev <= 1e-8);
  }
}

TEST_CASE("lambda matches the closed forms on all soliton-bearing entries") {
  Rng rng(11);
  for (const char* name : {"sphere", "hyperbolic", "pseudo_hyperbolic_zero",
                           "pseudo_hyperbolic_negative"}) {
    const CatalogEntry e = get_entry(name, 2);
    const TangentField V = split_tangent_field(e.chart, e.demo_field);
    double dev = 0.0;
    for (int p = 0; p < 100; ++p) {
      const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
      dev = std::max(dev, std::abs(extract_lambda_at(e.chart, V, u) -
                                   expected_lambda(e, e.demo_gamma, u)));
    }
    CHECK(dev <= 1e-7);
  }
}

TEST_CASE("lemma 3.1 residuals") {
  Rng rng(31);
  {
    const CatalogEntry e = get_entry("flat_plane", 2);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(3, 3);
    B(0, 1) = 0.6;
    B(1, 0) = -0.6;
    Eigen::VectorXd a(3), g(3);
    a << 0.3, -0.2, 0.9;
    g << 1.0, 0.0, -0.4;
    const ConformalField f(e.chart.ambient, a, 0.7, B, g);
    double dev = 0.0;
    for (int p = 0; p < 20; ++p)
      dev = std::max(dev, lemma31_residual_at(
                              e.chart, f, rand_point(e.chart.map.domain(), rng)));
    CHECK(dev <= 1e-9);
  }
  {
    const CatalogEntry e = get_entry("sphere", 2);
    double dev = 0.0;
    for (int p = 0; p < 20; ++p)
      dev = std::max(dev,
                     lemma31_residual_at(e.chart, e.demo_field,
                                         rand_point(e.chart.map.domain(), rng)));
    CHECK(dev <= 1e-8);
  }
  {
    const CatalogEntry e = get_entry("pseudo_hyperbolic_negative", 2);
    const ConformalField f = random_lorentz_field(3, rng);
    double dev = 0.0;
    for (int p = 0; p < 20; ++p)
      dev = std::max(dev, lemma31_residual_at(
                              e.chart, f, rand_point(e.chart.map.domain(), rng)));
    CHECK(dev <= 1e-7);
  }
}

TEST_CASE("lemma 3.2 residuals") {
  Rng rng(32);
  {
    // sphere with the closed-form soliton function
    const CatalogEntry e = get_entry("sphere", 2);
    double dev = 0.0;
    for (int p = 0; p < 20; ++p) {
      const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
      const double lam = expected_lambda(e, e.demo_gamma, u);
      dev = std::max(dev, lemma32_residual_at(e.chart, e.demo_field, lam, u));
    }
    CHECK(dev <= 1e-8);

    // a wrong lambda shifts the residual by the perturbation
    Eigen::VectorXd u(2);
    u << 0.9, 1.7;
    const double lam = expected_lambda(e, e.demo_gamma, u);
    const double r0 = lemma32_residual_at(e.chart, e.demo_field, lam, u);
    const double r1 = lemma32_residual_at(e.chart, e.demo_field, lam + 0.1, u);
    CHECK(std::abs(r1 - 0.1) <= r0 + 1e-12);
  }
  {
    // Ricci flat and totally geodesic: psi vanishes identically
    const CatalogEntry e = get_entry("flat_plane", 2);
    const auto f = ConformalField::dilation(e.chart.ambient, 1.3);
    const TangentField V = split_tangent_field(e.chart, f);
    const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
    const double lam = extract_lambda_at(e.chart, V, u);
    CHECK(lemma32_residual_at(e.chart, f, lam, u) <= 1e-12);
  }
}

TEST_CASE("lemma 3.3 residuals") {
  Rng rng(33);
  {
    const CatalogEntry e = get_entry("sphere", 2);
    double dev = 0.0;
    for (int p = 0; p < 20; ++p)
      dev = std::max(dev,
                     lemma33_residual_at(e.chart, e.demo_field,
                                         rand_point(e.chart.map.domain(), rng)));
    CHECK(dev <= 1e-8);
  }
  {
    // dilation field along the flat slice through the origin: C vanishes
    const CatalogEntry e = get_entry("flat_plane", 2);
    const auto f = ConformalField::dilation(e.chart.ambient, 1.0);
    const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
    const FramePoint fp = frame_at(e.chart, u);
    const AngleData ang = angle_data_of(fp, f);
    CHECK(std::abs(ang.C) <= 1e-14);
    CHECK(lemma33_residual_at(e.chart, f, u) <= 1e-12);
  }
  {
    const CatalogEntry e = get_entry("pseudo_hyperbolic_zero", 2);
    const ConformalField f = random_lorentz_field(3, rng);
    double dev = 0.0;
    for (int p = 0; p < 20; ++p)
      dev = std::max(dev, lemma33_residual_at(
                              e.chart, f, rand_point(e.chart.map.domain(), rng)));
    CHECK(dev <= 1e-6);
  }
}

TEST_CASE("lemma 3.4 residuals") {
  Rng rng(34);
  {
    const CatalogEntry e = get_entry("sphere", 2);
    double dev = 0.0;
    for (int p = 0; p < 20; ++p)
      dev = std::max(dev,
                     lemma34_residual_at(e.chart, e.demo_field,
                                         rand_point(e.chart.map.domain(), rng)));
    CHECK(dev <= 1e-8);
  }
  {
    // flat slice with an a-field: Hess C = -(N sigma) g with N sigma = <a,N>
    const CatalogEntry e = get_entry("flat_plane", 2);
    double dev = 0.0;
    for (int p = 0; p < 20; ++p)
      dev = std::max(dev,
                     lemma34_residual_at(e.chart, e.demo_field,
                                         rand_point(e.chart.map.domain(), rng)));
    CHECK(dev <= 1e-9);
    // and the Hessian itself is the constant multiple of g
    const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
    const FramePoint fp = frame_at(e.chart, u);
    const AngleData ang = angle_data_of(fp, e.demo_field);
    CHECK((ang.hess_C + ang.N_sigma * fp.g).cwiseAbs().maxCoeff() <= 1e-12);
  }
  {
    // curved quadric ambient exercises the cC term
    const CatalogEntry e = get_entry("latitude_sphere", 2);
    double dev = 0.0;
    for (int p = 0; p < 20; ++p)
      dev = std::max(dev,
                     lemma34_residual_at(e.chart, e.demo_field,
                                         rand_point(e.chart.map.domain(), rng)));
    CHECK(dev <= 1e-6);
  }
  {
    const CatalogEntry e = get_entry("pseudo_hyperbolic_negative", 2);
    const ConformalField f = random_lorentz_field(3, rng);
    double dev = 0.0;
    for (int p = 0; p < 20; ++p)
      dev = std::max(dev, lemma34_residual_at(
                              e.chart, f, rand_point(e.chart.map.domain(), rng)));
    CHECK(dev <= 1e-6);
  }
}

TEST_CASE("lemma chain consistency") {
  // l32 is l31 combined with the soliton equation; the residuals must obey
  // the triangle inequality to machine precision.
  Rng rng(35);
  for (const char* name : {"sphere", "hyperbolic"}) {
    const CatalogEntry e = get_entry(name, 2);
    const TangentField V = split_tangent_field(e.chart, e.demo_field);
    for (int p = 0; p < 20; ++p) {
      const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
      const double lam = extract_lambda_at(e.chart, V, u);
      const double l31 = lemma31_residual_at(e.chart, e.demo_field, u);
      const double l32 = lemma32_residual_at(e.chart, e.demo_field, lam, u);
      const double sol = soliton_residual_at(e.chart, V, lam, u);
      CHECK(l32 <= l31 + sol + 1e-9);
    }
  }
}

TEST_CASE("adding a Killing part changes nothing measurable") {
  const CatalogEntry e = get_entry("sphere", 2);
  Eigen::MatrixXd B(3, 3);
  B << 0, 0.8, -0.3, -0.8, 0, 0.5, 0.3, -0.5, 0;
  const ConformalField with_B(e.chart.ambient, Eigen::VectorXd::Zero(3), 0.0,
                              B, e.demo_field.gamma());
  const TangentField V0 = split_tangent_field(e.chart, e.demo_field);
  const TangentField V1 = split_tangent_field(e.chart, with_B);
  Rng rng(36);
  for (int p = 0; p < 20; ++p) {
    const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
    const double l0 = extract_lambda_at(e.chart, V0, u);
    const double l1 = extract_lambda_at(e.chart, V1, u);
    CHECK(std::abs(l0 - l1) <= 1e-8);
    CHECK(std::abs(soliton_residual_at(e.chart, V0, l0, u) -
                   soliton_residual_at(e.chart, V1, l1, u)) <= 1e-8);
  }
}

TEST_CASE("concircular fits on the catalog") {
  Rng rng(41);
  auto fit_for = [&](const CatalogEntry& e) {
    std::vector<ConcircularSample> samples;
    for (int p = 0; p < 25; ++p) {
      const FramePoint fp =
          frame_at(e.chart, rand_point(e.chart.map.domain(), rng));
      samples.push_back(concircular_point(fp, e.demo_field));
    }
    return concircular_fit(samples);
  };
  {
    const ConcircularFit f = fit_for(get_entry("sphere", 2));
    CHECK(std::abs(f.k - 1.0) <= 1e-6);
    CHECK(std::abs(f.b) <= 1e-6);
    CHECK(f.fit_residual <= 1e-8);
    CHECK(std::abs(f.k_expected - 1.0) <= 1e-12);
    CHECK(std::abs(f.b_expected) <= 1e-12);
    CHECK(f.b_expected_spread <= 1e-8);
  }
  {
    const ConcircularFit f = fit_for(get_entry("hyperbolic", 2));
    CHECK(std::abs(f.k + 1.0) <= 1e-6);
    CHECK(std::abs(f.b) <= 1e-6);
    CHECK(std::abs(f.k_expected + 1.0) <= 1e-12);
  }
  {
    // flat slice with an a-field: k = 0, b = -<a, N> = -1
    const ConcircularFit f = fit_for(get_entry("flat_plane", 2));
    CHECK(std::abs(f.k) <= 1e-6);
    CHECK(std::abs(f.b + 1.0) <= 1e-6);
    CHECK(std::abs(f.b_expected + 1.0) <= 1e-12);
    CHECK(f.b_expected_spread <= 1e-8);
  }
  {
    // constant angle function: degenerate, flagged not fabricated
    std::vector<ConcircularSample> samples(5);
    for (auto& s : samples) {
      s.C = 0.3;
      s.hess_orth = Eigen::MatrixXd::Zero(2, 2);
      s.k_expected = 0.0;
      s.b_expected = 0.0;
    }
    const ConcircularFit f = concircular_fit(samples);
    CHECK(f.degenerate);
    CHECK(std::isnan(f.k));
  }
  CHECK_THROWS_AS(concircular_fit(std::vector<ConcircularSample>(2)),
                  std::invalid_argument);
}

TEST_CASE("mu fit and the predicted mean curvature") {
  Rng rng(42);
  {
    const CatalogEntry e = get_entry("sphere", 2);
    // equator point: C = 0, psi = sigma - lambda = 0 - 1 = -1
    Eigen::VectorXd u(2);
    u << 1.5707963267948966, 1.0;
    const MuFit f = mu_fit_at(e.chart, u, -1.0, 0.0);
    CHECK(f.mu == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(f.residual <= 1e-10);
    REQUIRE(f.H_predicted.has_value());
    CHECK(*f.H_predicted == doctest::Approx(-1.0).epsilon(1e-10));
  }
  {
    const CatalogEntry e = get_entry("hyperbolic", 2);
    const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
    const FramePoint fp = frame_at(e.chart, u);
    const SplitSample sp = split_of(fp, e.demo_field);
    const TangentFieldSample tf = split_tangent_sample_of(fp, e.demo_field);
    const double lam = extract_lambda_of(fp, tf);
    const MuFit f = mu_fit_of(fp, sp.sigma_restricted - lam, sp.C);
    CHECK(f.mu == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(f.H_predicted.has_value());
    CHECK(*f.H_predicted == doctest::Approx(fp.H).epsilon(1e-8));
  }
  {
    const CatalogEntry e = get_entry("flat_plane", 2);
    const Eigen::VectorXd u = rand_point(e.chart.map.domain(), rng);
    CHECK_THROWS_AS(mu_fit_at(e.chart, u, 0.0, 0.0), NumericalError);
  }
}

TEST_CASE("tashiro classification table") {
  CHECK(tashiro_classify(1.0, 0.0, StationaryEvidence::None) ==
        TashiroCase::Spherical);
  CHECK(tashiro_classify(0.0, 0.5, StationaryEvidence::None) ==
        TashiroCase::Euclidean);
  CHECK(tashiro_classify(0.0, 0.0, StationaryEvidence::None) ==
        TashiroCase::ProductLine);
  CHECK(tashiro_classify(-1.0, 0.0, StationaryEvidence::Isolated) ==
        TashiroCase::Hyperbolic);
  CHECK(tashiro_classify(-1.0, 0.0, StationaryEvidence::None,
                         WarpProfile::ZeroType) ==
        TashiroCase::PseudoHyperbolicZero);
  CHECK(tashiro_classify(-1.0, 0.0, StationaryEvidence::None,
                         WarpProfile::NegativeType) ==
        TashiroCase::PseudoHyperbolicNegative);
  CHECK(tashiro_classify(-1.0, 0.0, StationaryEvidence::None) ==
        TashiroCase::PseudoHyperbolicUnresolved);
  CHECK(tashiro_classify(-1.0, 0.0, StationaryEvidence::Unknown) ==
        TashiroCase::Indeterminate);
  // the zero band
  CHECK(tashiro_classify(5e-7, 0.5, StationaryEvidence::None) ==
        TashiroCase::Euclidean);
}

TEST_CASE("closed-form solutions satisfy the concircular equation") {
  // rho'' + k rho = b via a 5-point second-difference stencil
  auto ode_residual = [](OdeCase oc, double a, double b, double c, double k) {
    double dev = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double s = -1.5 + i * (3.0 / 9.0);
      const double h = 1e-2;
      auto r = [&](double t) { return concircular_solution(oc, a, b, c, t); };
      const double d2 = (-r(s + 2 * h) + 16 * r(s + h) - 30 * r(s) +
                         16 * r(s - h) - r(s - 2 * h)) /
                        (12 * h * h);
      dev = std::max(dev, std::abs(d2 + k * r(s) - b));
    }
    return dev;
  };
  CHECK(concircular_solution(OdeCase::III, 1, 0, 1, 0) == 1.0);
  CHECK(concircular_solution(OdeCase::IB, 0, 2, 0, 3) == 9.0);

  CHECK(ode_residual(OdeCase::IA, 0.8, 0.0, 0.0, 0.0) <= 1e-8);
  CHECK(ode_residual(OdeCase::IB, 0.8, 0.6, 0.0, 0.0) <= 1e-8);
  CHECK(ode_residual(OdeCase::IIA0, 1.0, 0.0, 1.0, -1.0) <= 1e-8);
  CHECK(ode_residual(OdeCase::IIAminus, 0.7, 0.4, 1.3, -1.69) <= 1e-8);
  CHECK(ode_residual(OdeCase::IIB, 0.9, 0.5, 1.1, -1.21) <= 1e-8);
  CHECK(ode_residual(OdeCase::III, 1.2, 0.3, 0.9, 0.81) <= 1e-8);

  CHECK_THROWS_AS(concircular_solution(OdeCase::IA, 1, 1, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(concircular_solution(OdeCase::IB, 1, 0, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(concircular_solution(OdeCase::III, 1, 0, -2, 0),
                  std::invalid_argument);
}

TEST_CASE("stationary scans") {
  {
    // polar cap around the north pole: one isolated zero of grad C
    SmoothMap map(2, 3, Box::cube(2, -0.7, 0.7), [](const auto& u) {
      using V = std::decay_t<decltype(u)>;
      using std::sqrt;
      V x(3);
      x[0] = u[0];
      x[1] = u[1];
      x[2] = sqrt(1.0 - u[0] * u[0] - u[1] * u[1]);
      return x;
    });
    const Chart cap(std::move(map),
                    AmbientSpace::flat(Signature::euclidean(3)),
                    NormalOrientation::PositionVector);
    Eigen::VectorXd g2(3);
    g2 << 0, 0, 2;
    const auto f = ConformalField::translation(cap.ambient, g2);
    CHECK(stationary_scan(cap, f, 21) == StationaryEvidence::Isolated);
  }
  {
    // hyperboloid with spacelike direction: no critical point anywhere
    const CatalogEntry e = get_entry("hyperbolic", 2);
    Eigen::VectorXd g2(3);
    g2 << 0, 2, 0;
    const auto f = ConformalField::translation(e.chart.ambient, g2);
    CHECK(stationary_scan(e.chart, f, 21) == StationaryEvidence::None);
    // timelike direction: isolated stationary point at the apex
    CHECK(stationary_scan(e.chart, e.demo_field, 21) ==
          StationaryEvidence::Isolated);
  }
  {
    const CatalogEntry e = get_entry("flat_plane", 2);
    // an a-field makes C quadratic: one stationary point (case I,B)
    CHECK(stationary_scan(e.chart, e.demo_field, 21) ==
          StationaryEvidence::Isolated);
    // a rotation out of the slice plane makes C affine nonconstant
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(3, 3);
    B(0, 2) = 1.0;
    B(2, 0) = -1.0;
    const ConformalField f(e.chart.ambient, Eigen::VectorXd::Zero(3), 0.0, B,
                           Eigen::VectorXd::Zero(3));
    CHECK(stationary_scan(e.chart, f, 21) == StationaryEvidence::None);
  }
}
