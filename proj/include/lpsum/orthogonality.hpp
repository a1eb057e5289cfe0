#pragma once

// Birkhoff-James orthogonality x perp_B y (||x + lambda y|| >= ||x|| for all
// real lambda) in direct sums, decided through support functionals.
//
// Over the reals every set {g(w) : g in J(v)} is an interval, and the convex
// hull of a sum of independently ranging terms is the sum of their hulls.
// The characterisations therefore reduce to interval arithmetic:
//
//   1 < p < inf : 0 in sum_{n in supp x} ||x_n||^(p-1) {g(y_n) : g in J(x_n)}
//   p = 1       : min{|t| : t in sum_{n in supp x} {g(y_n)}} <= sum_{x_n = 0} ||y_n||
//   p = 0       : 0 in hull of {g(y_n) : g in J(x_n), n max-attaining}

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "lpsum/component_geometry.hpp"
#include "lpsum/errors.hpp"
#include "lpsum/interval.hpp"
#include "lpsum/sum_spaces.hpp"
#include "lpsum/tolerance.hpp"

namespace lpsum {

// Ingredients of the orthogonality test for a fixed x != 0.
struct OrthogonalityData {
  // Achievable values of the characterising expression.
  Interval values;
  // Budget from the zero coordinates of x (p = 1 only): orthogonal iff
  // values.min_abs() <= slack.
  double slack = 0.0;
  // d/dt of the expression along y -> y + t x.
  double shift_rate = 0.0;
  // Natural size of the expression, for relative tolerances.
  double scale = 0.0;
};

inline OrthogonalityData orthogonality_data(const SumSpace& X, const SumVector& x, const SumVector& y) {
  validate(X, x);
  validate(X, y);
  if (x.is_zero()) throw DegenerateInputError("orthogonality data needs x != 0");
  if (X.is_sup()) throw ValidationError("orthogonality is not provided for the l_inf container");
  const double nx = sum_norm(X, x);
  const double ny = sum_norm(X, y);
  OrthogonalityData d;
  if (X.is_c0()) {
    std::optional<Interval> hull;
    for (const auto& e : x.entries) {
      if (e.value.is_zero()) continue;
      const ComponentSpace& s = X.component(e.index);
      if (!detail::attains_max(norm(s, e.value), nx)) continue;
      const Interval v = value_interval(s, e.value, y.at_or_zero(e.index, s.dim()));
      hull = hull ? Interval::hull(*hull, v) : v;
    }
    d.values = *hull;
    d.shift_rate = nx;
    d.scale = ny;
    return d;
  }
  const double p = X.p();
  d.values = Interval::point(0.0);
  for (std::size_t n = 1; n <= X.size(); ++n) {
    const ComponentSpace& s = X.component(n);
    const ComponentVector* xn = x.find(n);
    const ComponentVector yn = y.at_or_zero(n, s.dim());
    if (!xn || xn->is_zero()) {
      if (X.is_l1()) d.slack += norm(s, yn);
      continue;
    }
    const double weight = X.is_l1() ? 1.0 : std::pow(norm(s, *xn), p - 1.0);
    d.values += weight * value_interval(s, *xn, yn);
  }
  d.shift_rate = X.is_l1() ? nx : std::pow(nx, p);
  d.scale = X.is_l1() ? ny : std::pow(nx, p - 1.0) * ny;
  return d;
}

inline bool decide(const OrthogonalityData& d) {
  return d.values.min_abs() <= d.slack + relative_slack(d.scale);
}

// x perp_B y through the support-functional characterisation.
inline bool bj_orthogonal(const SumSpace& X, const SumVector& x, const SumVector& y) {
  validate(X, x);
  validate(X, y);
  if (x.is_zero() || y.is_zero()) return true;
  return decide(orthogonality_data(X, x, y));
}

// Every t in the returned interval makes x perp_B (y + t x).
inline Interval completion_interval(const SumSpace& X, const SumVector& x, const SumVector& y) {
  const OrthogonalityData d = orthogonality_data(X, x, y);
  return {(-d.values.hi - d.slack) / d.shift_rate, (-d.values.lo + d.slack) / d.shift_rate};
}

// Midpoint of completion_interval: x perp_B (y + t x).
inline double orthogonal_completion(const SumSpace& X, const SumVector& x, const SumVector& y) {
  return completion_interval(X, x, y).mid();
}

// Orthogonality between two vectors of one component space.
inline bool component_orthogonal(const ComponentSpace& s, const ComponentVector& u, const ComponentVector& w) {
  if (u.is_zero() || w.is_zero()) return true;
  return value_interval(s, u, w).min_abs() <= relative_slack(norm(s, w));
}

namespace detail {

struct ExtremePick {
  ComponentFunctional lo, hi;
  double lo_value, hi_value;
};

inline ExtremePick extreme_pick(const ComponentSpace& s, const ComponentVector& v, const ComponentVector& w) {
  const JDescription j = support_set(s, v);
  ExtremePick pk{j.extreme.front(), j.extreme.front(), pair(j.extreme.front(), w), pair(j.extreme.front(), w)};
  for (const ComponentFunctional& g : j.extreme) {
    const double val = pair(g, w);
    if (val < pk.lo_value) pk.lo = g, pk.lo_value = val;
    if (val > pk.hi_value) pk.hi = g, pk.hi_value = val;
  }
  return pk;
}

// theta in [0, 1] with (1 - theta) lo + theta hi closest to `target`.
inline double blend(double lo, double hi, double target) {
  if (hi == lo) return 0.0;
  return std::clamp((target - lo) / (hi - lo), 0.0, 1.0);
}

}  // namespace detail

// A support functional f of x with f(y) = 0 (James' criterion), built as a
// convex combination of two extreme points of J(x); nullopt when x is not
// orthogonal to y.
inline std::optional<SumFunctional> orthogonality_witness_functional(const SumSpace& X, const SumVector& x,
                                                                     const SumVector& y) {
  if (!bj_orthogonal(X, x, y) || x.is_zero()) return std::nullopt;
  const SumJDescription j = support_functionals(X, x);
  SumFunctional f;

  if (X.is_c0()) {
    std::size_t n_lo = 0, n_hi = 0;
    ComponentFunctional g_lo, g_hi;
    double v_lo = std::numeric_limits<double>::infinity(), v_hi = -v_lo;
    for (const auto& c : j.supported) {
      const ComponentSpace& s = X.component(c.index);
      const detail::ExtremePick pk = detail::extreme_pick(s, c.vector, y.at_or_zero(c.index, s.dim()));
      if (pk.lo_value < v_lo) v_lo = pk.lo_value, g_lo = pk.lo, n_lo = c.index;
      if (pk.hi_value > v_hi) v_hi = pk.hi_value, g_hi = pk.hi, n_hi = c.index;
    }
    const double theta = detail::blend(v_lo, v_hi, 0.0);
    f.set(n_lo, (1.0 - theta) * g_lo);
    if (n_hi == n_lo)
      f.set(n_lo, *f.find(n_lo) + theta * g_hi);
    else
      f.set(n_hi, theta * g_hi);
    return f;
  }

  double lo = 0.0, hi = 0.0;
  std::vector<detail::ExtremePick> picks;
  for (const auto& c : j.supported) {
    const ComponentSpace& s = X.component(c.index);
    picks.push_back(detail::extreme_pick(s, c.vector, y.at_or_zero(c.index, s.dim())));
    lo += c.scale * picks.back().lo_value;
    hi += c.scale * picks.back().hi_value;
  }
  const double theta = detail::blend(lo, hi, 0.0);
  for (std::size_t k = 0; k < j.supported.size(); ++k) {
    const auto& c = j.supported[k];
    f.set(c.index, c.scale * ((1.0 - theta) * picks[k].lo + theta * picks[k].hi));
  }
  if (X.is_l1()) {
    // Cancel the remaining value s on the zero coordinates of x with
    // f_n = (-s / R) psi_n, psi_n in J(y_n), R = sum of ||y_n|| there.
    const double s_val = (1.0 - theta) * lo + theta * hi;
    double budget = 0.0;
    for (std::size_t n : j.free_ball) {
      if (const ComponentVector* yn = y.find(n)) budget += norm(X.component(n), *yn);
    }
    if (budget > 0.0 && s_val != 0.0) {
      const double factor = std::clamp(-s_val / budget, -1.0, 1.0);
      for (std::size_t n : j.free_ball) {
        const ComponentVector* yn = y.find(n);
        if (!yn || yn->is_zero()) continue;
        f.set(n, factor * support_set(X.component(n), *yn).canonical());
      }
    }
  }
  return f;
}

struct RankOneResult {
  bool x_perp_y = false;
  bool y_perp_x = false;
};

// Orthogonality in both directions when x has a single non-zero coordinate
// n0, reduced to statements inside X_{n0} and the norms of the other
// coordinates of y.
inline RankOneResult rank_one_tests(const SumSpace& X, const SumVector& x, const SumVector& y) {
  validate(X, x);
  validate(X, y);
  const std::vector<std::size_t> supp = x.support();
  if (supp.size() != 1) throw ValidationError("rank_one_tests needs x with exactly one non-zero coordinate");
  if (X.is_sup()) throw ValidationError("orthogonality is not provided for the l_inf container");
  const std::size_t n0 = supp.front();
  const ComponentSpace& s = X.component(n0);
  const ComponentVector& x0 = *x.find(n0);
  const ComponentVector y0 = y.at_or_zero(n0, s.dim());

  // Tolerances use the same scales as the full characterisation.
  const double nx = norm(s, x0);
  const double ny = sum_norm(X, y);
  const double xy = value_interval(s, x0, y0).min_abs();
  const double yx = y0.is_zero() ? 0.0 : value_interval(s, y0, x0).min_abs();

  RankOneResult r;
  if (X.is_interior()) {
    const double p = X.p();
    r.x_perp_y = xy <= relative_slack(ny);
    r.y_perp_x = y0.is_zero() || std::pow(norm(s, y0), p - 1.0) * yx <= relative_slack(std::pow(ny, p - 1.0) * nx);
  } else if (X.is_l1()) {
    double tail = 0.0;
    for (const auto& e : y.entries)
      if (e.index != n0) tail += norm(X.component(e.index), e.value);
    // |f(y_{n0})| for the best f in J(x_{n0}) against the tail mass.
    r.x_perp_y = xy <= tail + relative_slack(ny);
    r.y_perp_x = y0.is_zero() || yx <= relative_slack(nx);
  } else {
    r.x_perp_y = xy <= relative_slack(ny);
    // Another coordinate attaining the norm of y carries a functional that
    // vanishes on x.
    r.y_perp_x = yx <= relative_slack(nx);
    for (const auto& e : y.entries) {
      if (e.index != n0 && !e.value.is_zero() && detail::attains_max(norm(X.component(e.index), e.value), ny)) {
        r.y_perp_x = true;
        break;
      }
    }
  }
  return r;
}

}  // namespace lpsum
