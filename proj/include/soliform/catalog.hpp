#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soliform/conformal.hpp"
#include "soliform/hypersurface.hpp"
#include "soliform/soliton.hpp"

namespace soliform {

/// Closed form of the soliton function carried by a catalog geometry.
enum class LambdaForm {
  None,
  SigmaRestricted,  // lambda = sigma|_M (totally geodesic flat slice)
  QuadricHeight,    // lambda = eps_N (n - 1 - h_gamma)
  WarpedHeight      // lambda = -(n - 1) + h_gamma
};

/// A built-in geometry: chart, declared constants and expected
/// classification, plus a canonical demo field.
struct CatalogEntry {
  std::string name;
  Chart chart;
  double eps_N = 1.0;
  std::optional<double> H;          // constant mean curvature when umbilic
  double c_ambient = 0.0;
  std::optional<double> k_expected;
  TashiroCase classification = TashiroCase::NotApplicable;
  WarpProfile profile = WarpProfile::NotApplicable;
  bool umbilic = true;
  LambdaForm lambda_form = LambdaForm::None;
  ConformalField demo_field;
  Eigen::VectorXd demo_gamma;  // direction vector entering h_gamma
  int scan_grid = 21;
};

/// Stable public identifiers, in listing order.
const std::vector<std::string>& catalog_names();

/// Fixed latitude of the small-sphere entry.
inline constexpr double kLatitudeRadius = 0.7;

CatalogEntry get_entry(const std::string& name, int n);

/// Closed-form soliton function of a quadric-type entry for the direction
/// vector gamma, evaluated through the chart's own container realization.
double expected_lambda(const CatalogEntry& entry, const Eigen::VectorXd& gamma,
                       const Eigen::VectorXd& u);

/// max-entry norm of (pullback of B's induced metric under `map`) minus
/// A's induced metric at u.
double isometry_residual(const Chart& chartA, const Chart& chartB,
                         const SmoothMap& map, const Eigen::VectorXd& u);

}  // namespace soliform
