#pragma once

// Brute-force reference computations. Nothing here evaluates the closed-form
// characterisations of J(x), D(x) or orthogonality; the oracles work from
// the definitions (norm minimisation, pairwise distances, sampled ratios).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "lpsum/component_geometry.hpp"
#include "lpsum/errors.hpp"
#include "lpsum/grids.hpp"
#include "lpsum/sum_spaces.hpp"

namespace lpsum {

struct OracleConfig {
  // Golden-section stops when the bracket is narrower than
  // golden_section_width * (1 + ||x||).
  double golden_section_width = 1e-12;
  std::size_t grid_directions = 1024;
  // Cap on the number of extreme points entering a pair scan.
  std::size_t pair_scan_limit = 2048;

  void validate() const {
    if (!(golden_section_width > 0.0) || grid_directions == 0 || pair_scan_limit == 0)
      throw ValidationError("oracle configuration values must be strictly positive");
  }
};

struct MinNormResult {
  double min = 0.0;
  double argmin = 0.0;
};

// Golden-section minimisation of a convex function on [a, b]. Returns the
// smallest value seen together with its abscissa.
template <class F>
MinNormResult golden_section_minimize(F&& phi, double a, double b, double width) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  MinNormResult best{phi(a), a};
  auto consider = [&](double t, double v) {
    if (v < best.min) best = {v, t};
  };
  consider(b, phi(b));
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = phi(c);
  double fd = phi(d);
  consider(c, fc);
  consider(d, fd);
  // The second condition stops at floating-point resolution of the bracket.
  while (b - a > width && b - a > 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b))) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = phi(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = phi(d);
      consider(d, fd);
    }
  }
  return best;
}

// min over real lambda of ||x + lambda y||. Outside
// [-2||x||/||y||, 2||x||/||y||] the norm exceeds |lambda| ||y|| - ||x|| > ||x||,
// so the search is confined to that bracket.
inline MinNormResult oracle_min_norm(const SumSpace& X, const SumVector& x, const SumVector& y,
                                     const OracleConfig& cfg = {}) {
  cfg.validate();
  validate(X, x);
  validate(X, y);
  if (y.is_zero()) throw DegenerateInputError("oracle_min_norm needs a non-zero direction");
  const double nx = sum_norm(X, x);
  if (nx == 0.0) return {0.0, 0.0};
  const double ny = sum_norm(X, y);
  const double bound = 2.0 * nx / ny;
  auto phi = [&](double t) { return sum_norm(X, x + t * y); };
  MinNormResult r = golden_section_minimize(phi, -bound, bound, cfg.golden_section_width * (1.0 + nx));
  if (nx <= r.min) r = {nx, 0.0};
  return r;
}

// x perp_B y decided by minimisation: min_lambda ||x + lambda y|| >= ||x|| - tol.
inline bool bj_orthogonal_oracle(const SumSpace& X, const SumVector& x, const SumVector& y, double tol,
                                 const OracleConfig& cfg = {}) {
  if (!(tol > 0.0)) throw ValidationError("oracle tolerance must be positive");
  validate(X, x);
  validate(X, y);
  if (x.is_zero() || y.is_zero()) return true;
  return oracle_min_norm(X, x, y, cfg).min >= sum_norm(X, x) - tol;
}

namespace detail {

inline double max_pairwise_distance(const SumSpace& X, const std::vector<SumFunctional>& pts) {
  double best = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) best = std::max(best, dual_sum_norm(X, pts[a] - pts[b]));
  return best;
}

// One unit functional u on s (used as the +-u pair on a free coordinate).
inline ComponentFunctional unit_dual_functional(const ComponentSpace& s) {
  if (auto verts = dual_ball_vertices(s)) return verts->front();
  ComponentFunctional e = ComponentFunctional::zero(s.dim());
  e[0] = 1.0;
  return (1.0 / dual_norm(s, e)) * e;
}

}  // namespace detail

// Diameter of J(x) by pair scan over its extreme points. Each enumerated
// point is first checked against the definition of a support functional.
// For p = 1 each zero declared coordinate contributes the pair +-u with u a
// unit dual vector, which realises the free ball's diameter.
inline double oracle_diameter(const SumSpace& X, const SumVector& x, const OracleConfig& cfg = {}) {
  cfg.validate();
  std::vector<SumFunctional> pts;
  if (X.is_l1()) {
    const SumJDescription j = support_functionals(X, x);
    std::vector<std::pair<std::size_t, std::vector<ComponentFunctional>>> factors;
    for (const auto& c : j.supported) factors.emplace_back(c.index, c.j.extreme);
    for (std::size_t n : j.free_ball) {
      const ComponentFunctional u = detail::unit_dual_functional(X.component(n));
      factors.emplace_back(n, std::vector<ComponentFunctional>{u, -u});
    }
    double count = 1.0;
    for (const auto& f : factors) count *= static_cast<double>(f.second.size());
    if (count > static_cast<double>(cfg.pair_scan_limit)) throw NotEnumerableError("oracle_diameter: pair scan limit exceeded");
    pts.assign(1, SumFunctional{});
    for (const auto& [index, choices] : factors) {
      std::vector<SumFunctional> next;
      for (const SumFunctional& base : pts)
        for (const ComponentFunctional& g : choices) {
          SumFunctional f = base;
          f.set(index, g);
          next.push_back(std::move(f));
        }
      pts = std::move(next);
    }
  } else {
    pts = support_ext(X, x, {cfg.pair_scan_limit});
  }
  for (const SumFunctional& f : pts)
    if (!is_support(X, x, f, 1e-8)) throw std::logic_error("oracle_diameter: enumerated functional is not a support functional");
  return detail::max_pairwise_distance(X, pts);
}

// Lower bound on ||f|| from sampled ratios f(x) / ||x|| over a deterministic
// grid restricted to the support of f, plus the norming element.
inline double oracle_dual_norm(const SumSpace& X, const SumFunctional& f, std::size_t samples) {
  validate(X, f);
  if (samples < 1) throw ValidationError("oracle_dual_norm needs at least one sample");
  if (f.is_zero()) return 0.0;
  double best = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    SumVector x;
    std::size_t axis = 0;
    for (const auto& e : f.entries) {
      ComponentVector v = ComponentVector::zero(e.value.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = 2.0 * grids::kronecker(k, axis++) - 1.0;
      x.set(e.index, std::move(v));
    }
    const double nx = sum_norm(X, x);
    if (nx > 0.0) best = std::max(best, apply(f, x) / nx);
  }
  const SumVector y = norming_element(X, f, 1e-12);
  best = std::max(best, apply(f, y) / sum_norm(X, y));
  return best;
}

}  // namespace lpsum
