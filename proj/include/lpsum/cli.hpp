#pragma once

// Request dispatch behind the lpsum command-line tool. Each command reads
// its arguments from one JSON document and produces one JSON report.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpsum/component_geometry.hpp"
#include "lpsum/errors.hpp"
#include "lpsum/grids.hpp"
#include "lpsum/json_io.hpp"
#include "lpsum/oracles.hpp"
#include "lpsum/orthogonality.hpp"
#include "lpsum/semi_inner_product.hpp"
#include "lpsum/sum_spaces.hpp"
#include "lpsum/symmetry.hpp"
#include "lpsum/tolerance.hpp"

namespace lpsum::cli {

using json_io::Json;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"norm",     "dual",    "support",  "diam",       "smooth",     "orth",
                                              "sip",      "complete", "symmetric", "falsify", "crosscheck", "dgap-report"};
  return names;
}

struct QueryRequest {
  std::string command;
  Json arguments;
  double tol = kOracleTol;
  OracleConfig config;
};

struct Response {
  int exit_code = 0;
  Json body;
};

inline OracleConfig config_from_json(const Json& j) {
  OracleConfig c;
  if (j.contains("golden_section_width")) c.golden_section_width = j.at("golden_section_width").get<double>();
  if (j.contains("grid_directions")) c.grid_directions = j.at("grid_directions").get<std::size_t>();
  if (j.contains("pair_scan_limit")) c.pair_scan_limit = j.at("pair_scan_limit").get<std::size_t>();
  c.validate();
  return c;
}

struct DgapRow {
  long long n;
  double cal_d;
  double witness_d;
  double oracle_witness_d;
};

struct DgapReport {
  long long N;
  double p;
  std::vector<DgapRow> rows;
  std::size_t samples = 0;
  double max_sampled_d = 0.0;
  bool certified = false;
};

// Sum of the polygon spaces X_1..X_N with cal_D(X_n) = 2 - 1/n. Checks the
// per-component values, samples elements to see D(x) < 2 throughout, and
// evaluates D at a vertex witness concentrated on each coordinate.
inline DgapReport dgap_report(long long N, double p, const OracleConfig& cfg = {}) {
  if (N < 2) throw ValidationError("dgap-report needs N >= 2");
  if (!(p > 1.0) || !std::isfinite(p)) throw ValidationError("dgap-report needs 1 < p < inf");
  std::vector<ComponentSpace> comps;
  for (long long n = 1; n <= N; ++n) comps.push_back(polygon_family(n));
  const SumSpace X(p, comps);

  DgapReport r{N, p, {}, 0, 0.0, true};
  for (long long n = 1; n <= N; ++n) {
    const ComponentSpace& s = comps[static_cast<std::size_t>(n - 1)];
    const double target = 2.0 - 1.0 / static_cast<double>(n);
    const double cd = cal_d_component(s);
    // The vertex (1, 1) is where the extreme value is attained.
    SumVector w;
    w.set(static_cast<std::size_t>(n), ComponentVector{1.0, 1.0});
    const double wd = diameter(X, w);
    const double od = oracle_diameter(X, w, cfg);
    r.rows.push_back({n, cd, wd, od});
    if (std::abs(cd - target) > 1e-6 || wd < target - 1e-6 || std::abs(wd - od) > 1e-9) r.certified = false;
  }

  const std::size_t samples = std::max<std::size_t>(200, 20 * static_cast<std::size_t>(N));
  for (std::size_t k = 0; k < samples; ++k) {
    SumVector x;
    const std::size_t width = 1 + k % 4;
    double bound = 0.0;
    for (std::size_t j = 0; j < width; ++j) {
      const auto n = 1 + static_cast<std::size_t>(grids::kronecker(k, 2 * j) * static_cast<double>(N));
      const double scale = 0.1 + grids::kronecker(k, 2 * j + 1);
      // Alternate between vertex directions and generic directions.
      ComponentVector v = (k % 2 == 0) ? ComponentVector{scale, scale}
                                       : ComponentVector{2.0 * grids::kronecker(k + j, 5) - 1.0,
                                                         2.0 * grids::kronecker(k + j, 7) - 1.0};
      if (v.is_zero()) continue;
      x.set(n, v);
      bound = std::max(bound, 2.0 - 1.0 / static_cast<double>(n));
    }
    if (x.is_zero()) continue;
    const double d = diameter(X, x);
    ++r.samples;
    r.max_sampled_d = std::max(r.max_sampled_d, d);
    if (!(d < 2.0) || d > bound + 1e-9) r.certified = false;
  }
  return r;
}

inline Json to_json(const DgapReport& r) {
  Json rows = Json::array();
  for (const DgapRow& row : r.rows)
    rows.push_back(Json{{"n", row.n},
                        {"cal_D", row.cal_d},
                        {"target", 2.0 - 1.0 / static_cast<double>(row.n)},
                        {"witness_D", row.witness_d},
                        {"oracle_witness_D", row.oracle_witness_d}});
  return Json{{"N", r.N},
              {"p", r.p},
              {"cal_D_sum", 2.0},
              {"rows", rows},
              {"samples", r.samples},
              {"max_sampled_D", r.max_sampled_d},
              {"certified", r.certified}};
}

namespace detail {

inline const Json& arg(const Json& a, const char* key) {
  if (!a.is_object() || !a.contains(key)) throw ValidationError(std::string("request is missing \"") + key + "\"");
  return a.at(key);
}

inline SumVector vec(const SumSpace& X, const Json& a, const char* key) {
  SumVector v = json_io::vector_from_json(arg(a, key));
  validate(X, v);
  return v;
}

inline Side side(const Json& a) {
  const std::string s = a.contains("side") ? a.at("side").get<std::string>() : "left";
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw ValidationError("side must be \"left\" or \"right\"");
}

inline Json min_norm_json(const MinNormResult& m, double norm) {
  return Json{{"min", m.min}, {"argmin", m.argmin}, {"norm", norm}};
}

inline Json dispatch(const QueryRequest& q) {
  const Json& a = q.arguments;
  if (q.command == "dgap-report") {
    const long long N = arg(a, "N").get<long long>();
    const double p = json_io::detail::read_number(arg(a, "p"), "p");
    return to_json(dgap_report(N, p, q.config));
  }
  const SumSpace X = json_io::space_from_json(arg(a, "space"));

  if (q.command == "norm") return Json{{"norm", sum_norm(X, vec(X, a, "x"))}};

  if (q.command == "dual") {
    const SumFunctional f = json_io::functional_from_json(arg(a, "f"));
    validate(X, f);
    const double eps = a.contains("eps") ? a.at("eps").get<double>() : 1e-8;
    Json out{{"dual_space", json_io::to_json(dual_sum_space(X))}, {"dual_norm", dual_sum_norm(X, f)}};
    if (!f.is_zero()) {
      const SumVector y = norming_element(X, f, eps);
      out["norming_element"] = json_io::to_json(y);
      out["value"] = apply(f, y);
    }
    return out;
  }

  if (q.command == "support") {
    const SumVector x = vec(X, a, "x");
    const SumFunctional f = canonical_support(X, x);
    Json out{{"support_functional", json_io::to_json(f)}, {"is_support", is_support(X, x, f)}};
    try {
      Json ext = Json::array();
      for (const SumFunctional& g : support_ext(X, x, {q.config.pair_scan_limit})) ext.push_back(json_io::to_json(g));
      out["extreme_points"] = ext;
    } catch (const NotEnumerableError&) {
      out["extreme_points"] = nullptr;
    }
    return out;
  }

  if (q.command == "diam") {
    const SumVector x = vec(X, a, "x");
    return Json{{"D", diameter(X, x)}, {"cal_D", cal_d(X)}};
  }

  if (q.command == "smooth") {
    const SumVector x = vec(X, a, "x");
    const double eps = a.contains("eps") ? a.at("eps").get<double>() : 0.0;
    const SmoothnessReport s = smoothness_report(X, x, eps);
    return Json{{"smooth", s.smooth}, {"eps_smooth", s.eps_smooth}, {"D", s.D}};
  }

  const SumVector x = vec(X, a, "x");

  if (q.command == "symmetric") return Json{{"result", tribool_name(symmetric_point(X, x, side(a), {q.config, q.tol}))}};

  if (q.command == "falsify") {
    const auto w = falsify_symmetry(X, x, side(a), {q.config, q.tol});
    if (!w) return Json{{"witness", nullptr}};
    return Json{{"witness", json_io::to_json(w->witness)},
                {"scheme", w->scheme},
                {"min_norm",
                 Json{{"premise", min_norm_json(w->premise, w->premise_norm)},
                      {"conclusion", min_norm_json(w->conclusion, w->conclusion_norm)}}}};
  }

  const SumVector y = vec(X, a, "y");

  if (q.command == "orth") {
    const bool o = bj_orthogonal(X, x, y);
    Json out{{"orthogonal", o}};
    if (!x.is_zero() && !y.is_zero()) {
      const OrthogonalityData d = orthogonality_data(X, x, y);
      out["interval"] = json_io::to_json(d.values);
      if (X.is_l1()) out["slack"] = d.slack;
      if (auto f = orthogonality_witness_functional(X, x, y)) out["witness_functional"] = json_io::to_json(*f);
    }
    return out;
  }

  if (q.command == "sip") {
    const SipSelector canonical;
    Json out{{"sip", sip(X, canonical, x, y)}};
    if (!x.is_zero()) out["interval"] = json_io::to_json(sip_value_interval(X, x, y));
    if (a.contains("p")) {
      const double p = json_io::detail::read_number(a.at("p"), "p");
      out["p_sip_commuting"] = p_sip_commuting(X, x, y, p, side(a));
    }
    return out;
  }

  if (q.command == "complete") {
    const Interval range = completion_interval(X, x, y);
    const double t = range.mid();
    const SumVector z = y + t * x;
    Json out{{"t", t}, {"interval", json_io::to_json(range)}, {"completed", json_io::to_json(z)}};
    if (!z.is_zero()) out["min_norm"] = min_norm_json(oracle_min_norm(X, x, z, q.config), sum_norm(X, x));
    return out;
  }

  if (q.command == "crosscheck") {
    const bool c = bj_orthogonal(X, x, y);
    Json out{{"characterisation", c}};
    if (y.is_zero()) {
      out["oracle"] = true;
    } else {
      const MinNormResult m = oracle_min_norm(X, x, y, q.config);
      out["oracle"] = m.min >= sum_norm(X, x) - q.tol;
      out["min_norm"] = min_norm_json(m, sum_norm(X, x));
    }
    out["agree"] = out["oracle"].get<bool>() == c;
    if (!x.is_zero() && !X.is_sup()) {
      try {
        out["D"] = diameter(X, x);
        out["oracle_D"] = oracle_diameter(X, x, q.config);
      } catch (const NotEnumerableError&) {
        out["oracle_D"] = nullptr;
      }
    }
    return out;
  }

  throw ValidationError("unknown command \"" + q.command + "\"");
}

}  // namespace detail

// Exit codes: 0 success, 2 invalid request, 3 degenerate input.
inline Response run(const QueryRequest& q) {
  try {
    if (!(q.tol > 0.0)) throw ValidationError("--tol must be positive");
    q.config.validate();
    return {0, detail::dispatch(q)};
  } catch (const DegenerateInputError& e) {
    return {3, Json{{"error", "degenerate-input"}, {"message", e.what()}}};
  } catch (const NotEnumerableError& e) {
    return {2, Json{{"error", "not-enumerable"}, {"message", e.what()}}};
  } catch (const ConstructionError& e) {
    return {2, Json{{"error", "construction"}, {"message", e.what()}}};
  } catch (const std::invalid_argument& e) {
    return {2, Json{{"error", "validation"}, {"message", e.what()}}};
  } catch (const nlohmann::json::exception& e) {
    return {2, Json{{"error", "validation"}, {"message", e.what()}}};
  } catch (const std::out_of_range& e) {
    return {2, Json{{"error", "validation"}, {"message", e.what()}}};
  }
}

}  // namespace lpsum::cli
