#include "soliform/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "soliform/rng.hpp"

namespace soliform {

namespace {

using nlohmann::json;

struct PointData {
  Eigen::VectorXd u;
  bool ok = false;
  FramePoint fp;
  SplitSample sp;
  TangentFieldSample tf;
  double lambda = 0.0;
};

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json mat_to_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    a.push_back(row);
  }
  return a;
}

json finite_or_null(double x) {
  if (std::isfinite(x)) return json(x);
  return json(nullptr);
}

Eigen::VectorXd vec_from_json(const json& j, const std::string& path, int m) {
  if (!j.is_array())
    throw ValidationError(path, "expected an array of numbers");
  if (static_cast<int>(j.size()) != m)
    throw ValidationError(path, "expected " + std::to_string(m) + " entries");
  Eigen::VectorXd v(m);
  for (int i = 0; i < m; ++i) {
    if (!j[i].is_number())
      throw ValidationError(path + "[" + std::to_string(i) + "]",
                            "expected a number");
    v[i] = j[i].get<double>();
  }
  return v;
}

Eigen::MatrixXd mat_from_json(const json& j, const std::string& path, int m) {
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw ValidationError(path, "expected " + std::to_string(m) + " rows");
  Eigen::MatrixXd B(m, m);
  for (int r = 0; r < m; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw ValidationError(path + "[" + std::to_string(r) + "]",
                            "expected " + std::to_string(m) + " entries");
    for (int c = 0; c < m; ++c) {
      if (!row[c].is_number())
        throw ValidationError(path + "[" + std::to_string(r) + "][" +
                                  std::to_string(c) + "]",
                              "expected a number");
      B(r, c) = row[c].get<double>();
    }
  }
  return B;
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& prefix) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ValidationError(prefix.empty() ? it.key() : prefix + "." + it.key(),
                            "unknown key");
}

struct Prepared {
  CatalogEntry entry;
  ConformalField field;
};

Prepared prepare(const Scenario& s) {
  if (std::find(catalog_names().begin(), catalog_names().end(), s.geometry) ==
      catalog_names().end())
    throw ValidationError("geometry", "unknown catalog name '" + s.geometry + "'");
  CatalogEntry entry = [&] {
    try {
      return get_entry(s.geometry, s.n);
    } catch (const std::invalid_argument& e) {
      throw ValidationError("n", e.what());
    }
  }();

  std::set<std::string> seen;
  if (s.suites.empty())
    throw ValidationError("suites", "at least one suite required");
  for (const auto& name : s.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), name) ==
        suite_names().end())
      throw ValidationError("suites", "unknown suite '" + name + "'");
    if (!seen.insert(name).second)
      throw ValidationError("suites", "suite '" + name + "' requested twice");
  }
  for (const auto& [k, v] : s.tolerance_overrides) {
    if (std::find(suite_names().begin(), suite_names().end(), k) ==
        suite_names().end())
      throw ValidationError("tolerance_overrides", "unknown suite '" + k + "'");
    if (!(v > 0.0))
      throw ValidationError("tolerance_overrides." + k,
                            "tolerance must be positive");
  }
  if (s.samples < 1) throw ValidationError("samples", "must be positive");
  if ((seen.count("concircular") || seen.count("classify")) && s.samples < 3)
    throw ValidationError("samples",
                          "concircular/classify suites need at least 3 samples");

  if (!s.field_given) return Prepared{entry, entry.demo_field};

  const int m = entry.chart.ambient.container_dim();
  if (s.a.size() != m) throw ValidationError("field.a", "dimension mismatch");
  if (s.gamma.size() != m)
    throw ValidationError("field.gamma", "dimension mismatch");
  if (s.B.rows() != m || s.B.cols() != m)
    throw ValidationError("field.B", "dimension mismatch");

  auto check =
      validate_conformal_matrix(entry.chart.ambient.signature(), s.B);
  if (!check.valid) {
    const auto [j, k] = check.violations.front();
    throw ValidationError("field.B[" + std::to_string(j) + "][" +
                              std::to_string(k) + "]",
                          "violates eps_j b_jk + eps_k b_kj = 0, b_ii = 0");
  }
  if (entry.chart.ambient.kind() == AmbientSpace::Kind::Quadric) {
    if (s.a.cwiseAbs().maxCoeff() != 0.0)
      throw ValidationError("field.a", "quadric family has no a part");
    if (s.beta != 0.0)
      throw ValidationError("field.beta", "quadric family has no beta part");
  }
  return Prepared{entry,
                  ConformalField(entry.chart.ambient, s.a, s.beta, s.B, s.gamma)};
}

Stats stats_of(const std::vector<double>& xs) {
  Stats st;
  st.count = static_cast<int>(xs.size());
  if (xs.empty()) return st;
  st.min = st.max = xs[0];
  double sum = 0.0;
  for (double x : xs) {
    st.min = std::min(st.min, x);
    st.max = std::max(st.max, x);
    sum += x;
  }
  st.mean = sum / xs.size();
  return st;
}

json stats_to_json(const Stats& st) {
  return json{{"min", st.min}, {"max", st.max}, {"mean", st.mean},
              {"count", st.count}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "conformality", "lemmas", "soliton", "concircular",
      "classify",     "codazzi", "gauss"};
  return names;
}

double default_tolerance(const std::string& suite) {
  if (suite == "conformality") return 1e-8;
  if (suite == "lemmas") return 1e-6;
  if (suite == "soliton") return 1e-7;
  if (suite == "concircular") return 1e-6;
  if (suite == "classify") return 0.5;  // residual is 0 (match) or 1
  if (suite == "codazzi") return 1e-7;
  if (suite == "gauss") return 1e-7;
  throw std::invalid_argument("default_tolerance: unknown suite " + suite);
}

std::string suite_identity(const std::string& suite) {
  if (suite == "conformality") return "L_Vbar gbar = 2 sigma gbar";
  if (suite == "lemmas")
    return "tangential split identities l31..l34 of the angle function";
  if (suite == "soliton") return "Ric + (1/2) L_V g = lambda g";
  if (suite == "concircular") return "Hess C = (-kC + b) g";
  if (suite == "classify")
    return "special concircular constants against the Tashiro case table";
  if (suite == "codazzi") return "(nabla_X A)Y = (nabla_Y A)X";
  if (suite == "gauss")
    return "Ric = c(n-1) g + nH A - eps_N A^2; S/(n(n-1)) = c + eps_N H^2";
  throw std::invalid_argument("suite_identity: unknown suite " + suite);
}

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("", "config must be a JSON object");
  reject_unknown_keys(j,
                      {"geometry", "n", "field", "samples", "seed",
                       "tolerance_overrides", "suites"},
                      "");
  Scenario s;
  if (!j.contains("geometry") || !j["geometry"].is_string())
    throw ValidationError("geometry", "required string");
  s.geometry = j["geometry"].get<std::string>();
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ValidationError("n", "required integer");
  s.n = j["n"].get<int>();
  if (s.n < 2) throw ValidationError("n", "must be >= 2");

  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer())
      throw ValidationError("samples", "expected an integer");
    s.samples = j["samples"].get<int>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer())
      throw ValidationError("seed", "expected an integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("suites")) {
    if (!j["suites"].is_array())
      throw ValidationError("suites", "expected an array of suite names");
    for (const auto& e : j["suites"]) {
      if (!e.is_string())
        throw ValidationError("suites", "expected an array of suite names");
      s.suites.push_back(e.get<std::string>());
    }
  } else {
    s.suites = suite_names();
  }
  if (j.contains("tolerance_overrides")) {
    const json& t = j["tolerance_overrides"];
    if (!t.is_object())
      throw ValidationError("tolerance_overrides", "expected an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      if (!it.value().is_number())
        throw ValidationError("tolerance_overrides." + it.key(),
                              "expected a number");
      s.tolerance_overrides[it.key()] = it.value().get<double>();
    }
  }

  // Container dimension: quadric entries have one extra container slot.
  const int m =
      (s.geometry == "latitude_sphere") ? s.n + 2 : s.n + 1;
  if (j.contains("field")) {
    const json& f = j["field"];
    if (!f.is_object()) throw ValidationError("field", "expected an object");
    reject_unknown_keys(f, {"a", "beta", "B", "gamma"}, "field");
    s.field_given = true;
    s.a = f.contains("a") ? vec_from_json(f["a"], "field.a", m)
                          : Eigen::VectorXd::Zero(m);
    s.gamma = f.contains("gamma") ? vec_from_json(f["gamma"], "field.gamma", m)
                                  : Eigen::VectorXd::Zero(m);
    s.B = f.contains("B") ? mat_from_json(f["B"], "field.B", m)
                          : Eigen::MatrixXd::Zero(m, m);
    if (f.contains("beta")) {
      if (!f["beta"].is_number())
        throw ValidationError("field.beta", "expected a number");
      s.beta = f["beta"].get<double>();
    }
  }
  return s;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("config", std::string("JSON parse error: ") + e.what());
  }
  return scenario_from_json(j);
}

Scenario demo_scenario(const std::string& geometry, int n) {
  Scenario s;
  s.geometry = geometry;
  s.n = n;
  s.field_given = false;
  if (geometry == "saddle_graph")
    s.suites = {"codazzi", "gauss", "concircular", "classify"};
  else
    s.suites = suite_names();
  return s;
}

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

Report run_scenario(const Scenario& s) {
  Prepared prep = prepare(s);
  const CatalogEntry& entry = prep.entry;
  const ConformalField& field = prep.field;
  const Chart& chart = entry.chart;
  const int n = chart.n();

  Report rep;
  rep.scenario = s;
  if (!s.field_given) {
    rep.scenario.a = field.a();
    rep.scenario.beta = field.beta();
    rep.scenario.B = field.B();
    rep.scenario.gamma = field.gamma();
  }
  rep.points_requested = s.samples;

  Rng rng(s.seed);

  // Sample parameter points first so the draw order is independent of the
  // requested suites.
  const Box& box = chart.map.domain();
  Eigen::VectorXd lo(n), hi(n);
  for (int d = 0; d < n; ++d) {
    const double inset = 1e-3 * (box.hi[d] - box.lo[d]);
    lo[d] = box.lo[d] + inset;
    hi[d] = box.hi[d] - inset;
  }
  std::vector<PointData> pts(s.samples);
  for (auto& p : pts) p.u = rng.uniform_in(lo, hi);

  for (auto& p : pts) {
    try {
      p.fp = frame_at(chart, p.u);
      p.sp = split_of(p.fp, field);
      p.tf = split_tangent_sample_of(p.fp, field);
      p.lambda = extract_lambda_of(p.fp, p.tf);
      p.ok = true;
    } catch (const NumericalError&) {
      ++rep.point_errors;
    }
  }
  std::vector<double> lambdas, psis, Cs;
  for (const auto& p : pts) {
    if (!p.ok) continue;
    lambdas.push_back(p.lambda);
    psis.push_back(p.sp.sigma_restricted - p.lambda);
    Cs.push_back(p.sp.C);
  }
  rep.points_evaluated = static_cast<int>(lambdas.size());
  rep.lambda_stats = stats_of(lambdas);
  rep.psi_stats = stats_of(psis);
  rep.C_stats = stats_of(Cs);

  // Direction vector of the translation part; enters the closed-form
  // soliton function for the quadric-type geometries.
  const Eigen::VectorXd gamma_dir = 0.5 * field.gamma();
  const bool pure_translation =
      field.a().cwiseAbs().maxCoeff() == 0.0 && field.beta() == 0.0;

  for (const std::string& suite : s.suites) {
    SuiteResult res;
    res.suite = suite;
    res.identity = suite_identity(suite);
    res.tolerance = s.tolerance_overrides.count(suite)
                        ? s.tolerance_overrides.at(suite)
                        : default_tolerance(suite);
    res.details = json::object();

    if (suite == "conformality") {
      double conf = 0.0, hess = 0.0;
      for (const auto& p : pts) {
        if (!p.ok) continue;
        conf = std::max(conf, conformality_residual(field, p.fp.x, 20, rng));
        hess = std::max(hess, sigma_hessian_residual(field, p.fp.x, 20, rng));
      }
      res.max_residual = std::max(conf, hess);
      res.details["lie_residual"] = conf;
      res.details["sigma_hessian_residual"] = hess;
    } else if (suite == "codazzi") {
      double dev = 0.0;
      for (const auto& p : pts)
        if (p.ok) dev = std::max(dev, codazzi_residual_of(p.fp));
      res.max_residual = dev;
    } else if (suite == "gauss") {
      double dev = 0.0, scalar_dev = 0.0;
      const double c = chart.ambient.curvature();
      for (const auto& p : pts) {
        if (!p.ok) continue;
        const RicciData ric = ricci_of(p.fp);
        const Eigen::MatrixXd rhs =
            c * (n - 1) * p.fp.g + n * p.fp.H * p.fp.a_bilinear() -
            p.fp.eps_N * p.fp.a2_bilinear();
        dev = std::max(
            dev, p.fp.whiten_form(ric.ric - rhs).cwiseAbs().maxCoeff());
        if (umbilicity_of(p.fp).is_umbilic)
          scalar_dev = std::max(
              scalar_dev,
              std::abs(ric.scalar / (n * (n - 1.0)) -
                       (c + p.fp.eps_N * p.fp.H * p.fp.H)));
      }
      res.max_residual = std::max(dev, scalar_dev);
      res.details["contracted_gauss"] = dev;
      res.details["scalar_identity"] = scalar_dev;
    } else if (suite == "lemmas") {
      double l31 = 0.0, l32 = 0.0, l33 = 0.0, l34 = 0.0;
      for (const auto& p : pts) {
        if (!p.ok) continue;
        l31 = std::max(l31, lemma31_residual_of(p.fp, field));
        l32 = std::max(l32, lemma32_residual_of(p.fp, field, p.lambda));
        l33 = std::max(l33, lemma33_residual_of(p.fp, field));
        l34 = std::max(l34, lemma34_residual_of(p.fp, field));
      }
      res.max_residual = std::max({l31, l32, l33, l34});
      res.details["l31"] = {{"identity", "L_Vbar gbar - L_V g = -2 eps_N C A"},
                            {"max_residual", l31}};
      res.details["l32"] = {{"identity", "Ric = -psi g - eps_N C A"},
                            {"max_residual", l32}};
      res.details["l33"] =
          {{"identity", "grad C = -(nabla_N Vbar)^T - A V"},
           {"max_residual", l33}};
      res.details["l34"] =
          {{"identity",
            "Hess C = -(cC + N sigma) g + sigma A + eps_N C A^2 - (nabla_V A) "
            "- sym(A nabla V)"},
           {"max_residual", l34}};
    } else if (suite == "soliton") {
      double resid = 0.0, mismatch = 0.0;
      bool has_form = false;
      for (const auto& p : pts) {
        if (!p.ok) continue;
        resid = std::max(resid, soliton_residual_of(p.fp, p.tf, p.lambda));
        if (entry.lambda_form == LambdaForm::SigmaRestricted) {
          has_form = true;
          mismatch =
              std::max(mismatch, std::abs(p.lambda - p.sp.sigma_restricted));
        } else if ((entry.lambda_form == LambdaForm::QuadricHeight ||
                    entry.lambda_form == LambdaForm::WarpedHeight) &&
                   pure_translation) {
          has_form = true;
          mismatch = std::max(
              mismatch,
              std::abs(p.lambda - expected_lambda(entry, gamma_dir, p.u)));
        }
      }
      res.max_residual = std::max(resid, mismatch);
      res.details["equation_residual"] = resid;
      res.details["lambda_closed_form_checked"] = has_form;
      res.details["lambda_closed_form_mismatch"] =
          has_form ? json(mismatch) : json(nullptr);
    } else if (suite == "concircular") {
      std::vector<ConcircularSample> samples;
      for (const auto& p : pts)
        if (p.ok) samples.push_back(concircular_point(p.fp, field));
      if (samples.size() < 3) {
        res.max_residual = std::numeric_limits<double>::quiet_NaN();
        res.details["error"] = "fewer than 3 evaluable points";
        res.status = SuiteStatus::Fail;
        rep.all_pass = false;
        rep.suites.push_back(std::move(res));
        continue;
      }
      const ConcircularFit fit = concircular_fit(samples);
      res.details["k"] = finite_or_null(fit.k);
      res.details["b"] = finite_or_null(fit.b);
      res.details["k_expected"] = fit.k_expected;
      res.details["b_expected"] = fit.b_expected;
      res.details["k_expected_spread"] = fit.k_expected_spread;
      res.details["b_expected_spread"] = fit.b_expected_spread;
      res.details["fit_residual"] = finite_or_null(fit.fit_residual);
      res.details["degenerate"] = fit.degenerate;
      if (!entry.umbilic) {
        res.status = SuiteStatus::NotApplicable;
        res.max_residual = std::numeric_limits<double>::quiet_NaN();
      } else if (fit.degenerate) {
        res.max_residual = std::numeric_limits<double>::quiet_NaN();
      } else {
        res.max_residual = std::max(std::abs(fit.k - fit.k_expected),
                                    std::abs(fit.b - fit.b_expected));
      }
    } else if (suite == "classify") {
      bool umbilic_everywhere = true;
      double worst_dev = 0.0;
      for (const auto& p : pts) {
        if (!p.ok) continue;
        const UmbilicityReport ur = umbilicity_of(p.fp);
        worst_dev = std::max(worst_dev, ur.deviation);
        if (!ur.is_umbilic) umbilic_everywhere = false;
      }
      res.details["umbilicity_deviation"] = worst_dev;
      int psi_nonzero = 0;
      for (double psi : psis)
        if (std::abs(psi) > 1e-8) ++psi_nonzero;
      res.details["psi_nonzero_fraction"] =
          psis.empty() ? 0.0 : double(psi_nonzero) / psis.size();

      if (!umbilic_everywhere) {
        res.status = SuiteStatus::NotApplicable;
        res.max_residual = std::numeric_limits<double>::quiet_NaN();
        res.details["verdict"] = to_string(TashiroCase::NotApplicable);
        res.details["expected"] = to_string(entry.classification);
      } else if ([&] {
                   int ok = 0;
                   for (const auto& p : pts) ok += p.ok ? 1 : 0;
                   return ok < 3;
                 }()) {
        res.max_residual = std::numeric_limits<double>::quiet_NaN();
        res.details["error"] = "fewer than 3 evaluable points";
        res.status = SuiteStatus::Fail;
      } else {
        std::vector<ConcircularSample> samples;
        for (const auto& p : pts)
          if (p.ok) samples.push_back(concircular_point(p.fp, field));
        const ConcircularFit fit = concircular_fit(samples);
        const StationaryEvidence ev =
            stationary_scan(chart, field, entry.scan_grid);
        const TashiroCase verdict = fit.degenerate
                                        ? TashiroCase::Indeterminate
                                        : tashiro_classify(fit.k, fit.b, ev,
                                                           entry.profile);
        res.details["k"] = finite_or_null(fit.k);
        res.details["b"] = finite_or_null(fit.b);
        res.details["stationary_evidence"] = to_string(ev);
        res.details["verdict"] = to_string(verdict);
        res.details["expected"] = to_string(entry.classification);
        // mu-fit diagnostics at the first evaluable point
        for (const auto& p : pts) {
          if (!p.ok) continue;
          try {
            const MuFit mf = mu_fit_of(
                p.fp, p.sp.sigma_restricted - p.lambda, p.sp.C);
            res.details["mu_fit"] = {
                {"mu", mf.mu},
                {"residual", mf.residual},
                {"H_predicted", mf.H_predicted ? json(*mf.H_predicted)
                                               : json(nullptr)},
                {"H", p.fp.H}};
          } catch (const NumericalError&) {
            res.details["mu_fit"] = json(nullptr);
          }
          break;
        }
        res.max_residual = verdict == entry.classification ? 0.0 : 1.0;
        res.status = verdict == entry.classification ? SuiteStatus::Pass
                                                     : SuiteStatus::Fail;
      }
    }

    if (suite != "classify" && res.status != SuiteStatus::NotApplicable) {
      res.status = (std::isfinite(res.max_residual) &&
                    res.max_residual <= res.tolerance)
                       ? SuiteStatus::Pass
                       : SuiteStatus::Fail;
    }
    if (res.status == SuiteStatus::Fail) rep.all_pass = false;
    rep.suites.push_back(std::move(res));
  }
  return rep;
}

json report_to_json(const Report& r) {
  json scen;
  scen["geometry"] = r.scenario.geometry;
  scen["n"] = r.scenario.n;
  scen["samples"] = r.scenario.samples;
  scen["seed"] = r.scenario.seed;
  scen["suites"] = r.scenario.suites;
  scen["field"] = {{"a", vec_to_json(r.scenario.a)},
                   {"beta", r.scenario.beta},
                   {"B", mat_to_json(r.scenario.B)},
                   {"gamma", vec_to_json(r.scenario.gamma)}};
  json tol = json::object();
  for (const auto& [k, v] : r.scenario.tolerance_overrides) tol[k] = v;
  scen["tolerance_overrides"] = tol;

  json suites = json::array();
  for (const auto& sr : r.suites) {
    json e;
    e["suite"] = sr.suite;
    e["identity"] = sr.identity;
    e["max_residual"] = finite_or_null(sr.max_residual);
    e["tolerance"] = sr.tolerance;
    e["status"] = to_string(sr.status);
    e["details"] = sr.details;
    suites.push_back(e);
  }

  json out;
  out["scenario"] = scen;
  out["suites"] = suites;
  out["stats"] = {{"lambda", stats_to_json(r.lambda_stats)},
                  {"psi", stats_to_json(r.psi_stats)},
                  {"C", stats_to_json(r.C_stats)}};
  out["points"] = {{"requested", r.points_requested},
                   {"evaluated", r.points_evaluated},
                   {"errors", r.point_errors}};
  out["pass"] = r.all_pass;
  return out;
}

std::string report_json_string(const Report& r) {
  return report_to_json(r).dump(2) + "\n";
}

std::string report_csv_summary(const Report& r) {
  std::string out = "suite,max_residual,tolerance,pass\n";
  for (const auto& sr : r.suites) {
    out += sr.suite + ",";
    out += std::isfinite(sr.max_residual) ? json(sr.max_residual).dump()
                                          : std::string("nan");
    out += "," + json(sr.tolerance).dump() + "," + to_string(sr.status) + "\n";
  }
  return out;
}

int exit_code_for(const Report& r) { return r.all_pass ? 0 : 1; }

json list_catalog() {
  json out = json::array();
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = get_entry(name, 2);
    json item;
    item["name"] = e.name;
    item["eps_N"] = e.eps_N;
    item["H"] = e.H ? json(*e.H) : json(nullptr);
    item["k"] = e.k_expected ? json(*e.k_expected) : json(nullptr);
    item["classification"] = to_string(e.classification);
    out.push_back(item);
  }
  return out;
}

}  // namespace soliform
