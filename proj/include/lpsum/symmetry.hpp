#pragma once

// Left/right-symmetric points. x is left-symmetric when x perp_B y implies
// y perp_B x for every y, right-symmetric when y perp_B x implies x perp_B y.
//
// Verdicts follow the structure of symmetric points in each kind of sum. A "no"
// is backed, where possible, by an explicit counterexample that is checked
// against the characterisation and then against the minimisation oracle.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpsum/component_geometry.hpp"
#include "lpsum/errors.hpp"
#include "lpsum/grids.hpp"
#include "lpsum/oracles.hpp"
#include "lpsum/orthogonality.hpp"
#include "lpsum/semi_inner_product.hpp"
#include "lpsum/sum_spaces.hpp"
#include "lpsum/tolerance.hpp"

namespace lpsum {

enum class TriBool { yes, no, unknown };

inline const char* tribool_name(TriBool t) {
  switch (t) {
    case TriBool::yes: return "yes";
    case TriBool::no: return "no";
    case TriBool::unknown: return "unknown";
  }
  return "unknown";
}

struct SymmetryConfig {
  OracleConfig oracle;
  double oracle_tol = kOracleTol;
  // Relative gap by which a grid candidate must violate the conclusion before
  // it is handed to the oracle.
  double search_margin = 1e-2;
};

struct SymmetryWitness {
  SumVector witness;
  std::string scheme;
  // min over lambda of ||a + lambda b|| for the premise pair and for the
  // pair whose orthogonality fails, with the norms of a.
  MinNormResult premise;
  double premise_norm = 0.0;
  MinNormResult conclusion;
  double conclusion_norm = 0.0;
};

namespace detail {

// (a, b) such that the premise is a perp_B b; the conclusion is b perp_B a.
inline std::pair<const SumVector*, const SumVector*> premise_pair(Side side, const SumVector& x, const SumVector& w) {
  return side == Side::left ? std::pair{&x, &w} : std::pair{&w, &x};
}

// The premise holds and the conclusion fails by at least `margin` relative
// to the natural scale, both judged by the characterisation.
inline bool breaks_by_characterisation(const SumSpace& X, const SumVector& x, const SumVector& w, Side side,
                                       double margin) {
  if (w.is_zero()) return false;
  auto [a, b] = premise_pair(side, x, w);
  if (!bj_orthogonal(X, *a, *b)) return false;
  const OrthogonalityData d = orthogonality_data(X, *b, *a);
  return d.values.min_abs() > d.slack + margin * std::max(d.scale, kGeomTol);
}

inline std::optional<SymmetryWitness> confirm(const SumSpace& X, const SumVector& x, const SumVector& w, Side side,
                                              std::string scheme, const SymmetryConfig& cfg) {
  if (w.is_zero()) return std::nullopt;
  auto [a, b] = premise_pair(side, x, w);
  if (!bj_orthogonal(X, *a, *b) || bj_orthogonal(X, *b, *a)) return std::nullopt;
  SymmetryWitness out{w, std::move(scheme), oracle_min_norm(X, *a, *b, cfg.oracle), sum_norm(X, *a),
                      oracle_min_norm(X, *b, *a, cfg.oracle), sum_norm(X, *b)};
  if (out.premise.min < out.premise_norm - cfg.oracle_tol) return std::nullopt;
  if (out.conclusion.min >= out.conclusion_norm - cfg.oracle_tol) return std::nullopt;
  return out;
}

// Grid vector with a block for every declared coordinate.
inline SumVector grid_vector(const SumSpace& X, std::size_t k) {
  SumVector v;
  std::size_t axis = 0;
  for (std::size_t n = 1; n <= X.size(); ++n) {
    ComponentVector c = ComponentVector::zero(X.component(n).dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = 2.0 * grids::kronecker(k, axis++) - 1.0;
    v.set(n, std::move(c));
  }
  return v;
}

// Boundaries of {s : (w + s x) perp_B x}, the minimisers of s -> ||w + s x||,
// located by bisection on the sign of the achievable values.
inline std::optional<Interval> minimiser_interval(const SumSpace& X, const SumVector& x, const SumVector& w) {
  const double bound = 2.0 * sum_norm(X, w) / sum_norm(X, x) + 1.0;
  auto data = [&](double s) -> std::optional<OrthogonalityData> {
    const SumVector y = w + s * x;
    if (y.is_zero()) return std::nullopt;
    return orthogonality_data(X, y, x);
  };
  // not_decreasing(s): the one-sided derivative from the right is >= 0.
  auto not_decreasing = [&](double s) {
    const auto d = data(s);
    return !d || d->values.hi + d->slack >= 0.0;
  };
  auto not_increasing = [&](double s) {
    const auto d = data(s);
    return !d || d->values.lo - d->slack <= 0.0;
  };
  double a = -bound, b = bound;
  for (int it = 0; it < 200 && b - a > 1e-15 * bound; ++it) {
    const double m = 0.5 * (a + b);
    (not_decreasing(m) ? b : a) = m;
  }
  const double lo = b;
  a = -bound, b = bound;
  for (int it = 0; it < 200 && b - a > 1e-15 * bound; ++it) {
    const double m = 0.5 * (a + b);
    (not_increasing(m) ? a : b) = m;
  }
  const double hi = a;
  if (hi < lo) return Interval::point(lo);
  return Interval{lo, hi};
}

// Grid search: left candidates w + t x with t making x perp_B (w + t x);
// right candidates w + s x with s minimising ||w + s x||.
inline std::optional<SymmetryWitness> grid_search(const SumSpace& X, const SumVector& x, Side side,
                                                  const SymmetryConfig& cfg) {
  for (std::size_t k = 0; k < cfg.oracle.grid_directions; ++k) {
    const SumVector w = grid_vector(X, k);
    std::optional<Interval> range;
    if (side == Side::left) {
      range = completion_interval(X, x, w);
    } else {
      range = minimiser_interval(X, x, w);
    }
    if (!range) continue;
    for (double t : {range->lo, range->hi, range->mid()}) {
      const SumVector y = w + t * x;
      if (!breaks_by_characterisation(X, x, y, side, cfg.search_margin)) continue;
      if (auto found = confirm(X, x, y, side, "grid-search", cfg)) return found;
    }
  }
  return std::nullopt;
}

struct Analysis {
  TriBool verdict = TriBool::unknown;
  std::optional<SumVector> candidate;
  std::string scheme;
};

inline double entry_norm(const SumSpace& X, const SumVector& x, std::size_t n) {
  const ComponentVector* v = x.find(n);
  return v ? norm(X.component(n), *v) : 0.0;
}

inline std::vector<std::size_t> nonzero_entries(const SumVector& x) { return x.support(); }

inline ComponentVector first_axis(const ComponentSpace& s) {
  ComponentVector e = ComponentVector::zero(s.dim());
  e[0] = 1.0;
  return (1.0 / norm(s, e)) * e;
}

}  // namespace detail

// Component-level predicates, decided in closed form for euclidean and
// one-dimensional components and by grid falsification elsewhere.
inline TriBool component_symmetric(const ComponentSpace& s, const ComponentVector& v, Side side,
                                   const SymmetryConfig& cfg = {}) {
  if (v.is_zero()) throw DegenerateInputError("symmetric points are classified only for x != 0");
  if (s.kind() == Kind::euclidean || s.dim() == 1) return TriBool::yes;
  const SumSpace one = detail::single(s);
  return detail::grid_search(one, detail::embed(v), side, cfg) ? TriBool::no : TriBool::unknown;
}

// Whether v commutes (on the given side) with every direction: exact for
// euclidean and one-dimensional components, grid falsification otherwise.
inline TriBool component_p_sip_symmetric(const ComponentSpace& s, const ComponentVector& v, double p, Side side,
                                         const SymmetryConfig& cfg = {}) {
  if (v.is_zero()) throw DegenerateInputError("symmetric points are classified only for x != 0");
  if (s.dim() == 1) return TriBool::yes;
  if (s.kind() == Kind::euclidean) return p == 2.0 ? TriBool::yes : TriBool::no;
  for (const auto& dir : grids::directions(s.dim(), cfg.oracle.grid_directions)) {
    const ComponentVector u(dir);
    if (!p_sip_commuting(s, v, u, p, side)) return TriBool::no;
  }
  return TriBool::unknown;
}

namespace detail {

inline Analysis embedded_component(const SumSpace& X, const SumVector& x, std::size_t n0, Side side,
                                   const SymmetryConfig& cfg) {
  const ComponentSpace& s = X.component(n0);
  const ComponentVector& v = *x.find(n0);
  if (s.kind() == Kind::euclidean || s.dim() == 1) return {TriBool::yes, std::nullopt, ""};
  if (auto w = grid_search(single(s), embed(v), side, cfg))
    return {TriBool::no, embed(w->witness.at_or_zero(1, s.dim()), n0), "component"};
  return {TriBool::unknown, std::nullopt, ""};
}

// y = z e_n + alpha x_m e_m. With A the alphas giving x perp_B y and B the
// alphas giving y perp_B x, a left witness takes alpha in A \ B, a right
// witness alpha in B \ A; z ranges over a direction grid of X_n.
inline std::optional<SumVector> two_coordinate_probe(const SumSpace& X, const SumVector& x, std::size_t n,
                                                     std::size_t m, Side side, const SymmetryConfig& cfg) {
  const double p = X.p();
  const ComponentSpace& sn = X.component(n);
  const ComponentSpace& sm = X.component(m);
  const ComponentVector& xn = *x.find(n);
  const ComponentVector& xm = *x.find(m);
  const double cn = norm(sn, xn), cm = norm(sm, xm);
  auto inv_power = [&](double s) { return s == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(s), 1.0 / (p - 1.0)), s); };
  for (const auto& dir : grids::directions(sn.dim(), cfg.oracle.grid_directions)) {
    const ComponentVector z(dir);
    const double nz = norm(sn, z);
    const Interval vi = std::pow(cn, p - 1.0) / std::pow(cm, p) * value_interval(sn, xn, z);
    const Interval wi = std::pow(nz, p - 1.0) / std::pow(cm, p) * value_interval(sn, z, xn);
    const Interval A{-vi.hi, -vi.lo};
    const Interval B{inv_power(-wi.hi), inv_power(-wi.lo)};
    const Interval& from = side == Side::left ? A : B;
    const Interval& avoid = side == Side::left ? B : A;
    // Prefer the middle of the range so the premise holds with room to spare.
    double alpha = from.mid();
    for (double c : {from.lo, from.hi})
      if (avoid.distance(c) > avoid.distance(alpha)) alpha = c;
    if (avoid.distance(alpha) <= cfg.search_margin * std::max({1.0, std::abs(alpha)})) continue;
    SumVector y;
    y.set(n, z);
    y.set(m, alpha * xm);
    if (breaks_by_characterisation(X, x, y, side, 0.0)) return y;
  }
  return std::nullopt;
}

inline Analysis analyse_l1(const SumSpace& X, const SumVector& x, Side side, const SymmetryConfig& cfg) {
  const std::vector<std::size_t> nz = nonzero_entries(x);
  Analysis a;
  if (side == Side::left) {
    if (X.size() == 1) return embedded_component(X, x, nz.front(), side, cfg);
    for (std::size_t n = 1; n <= X.size(); ++n) {
      if (entry_norm(X, x, n) != 0.0) continue;
      // A coordinate outside supp(x) carrying more mass than all of x.
      const ComponentSpace& s = X.component(n);
      SumVector z = x;
      z.set(n, (2.0 * sum_norm(X, x) + 1.0) * first_axis(s));
      return {TriBool::no, z, "l1-zero-coordinate"};
    }
    // Full support: unit vectors along x_n with weights a_n summing to zero
    // and unequal partial sums over a split.
    const std::size_t N = nz.size();
    for (std::size_t M = 1; M < N; ++M) {
      double head = 0.0, tail = 0.0;
      for (std::size_t k = 0; k < N; ++k) (k < M ? head : tail) += entry_norm(X, x, nz[k]);
      if (std::abs(head - tail) <= 1e-6 * (head + tail)) continue;
      SumVector z;
      for (std::size_t k = 0; k < N; ++k) {
        const double weight = k < M ? 1.0 / static_cast<double>(M) : -1.0 / static_cast<double>(N - M);
        z.set(nz[k], (weight / entry_norm(X, x, nz[k])) * *x.find(nz[k]));
      }
      return {TriBool::no, z, "l1-split"};
    }
    a.verdict = TriBool::unknown;
    return a;
  }
  if (nz.size() >= 2) {
    // y = x restricted to its smallest coordinate: y perp_B x since the rest
    // of x outweighs it, while x is not orthogonal to y.
    std::size_t small = nz.front();
    for (std::size_t n : nz)
      if (entry_norm(X, x, n) < entry_norm(X, x, small)) small = n;
    SumVector y;
    y.set(small, *x.find(small));
    return {TriBool::no, y, "l1-restriction"};
  }
  return embedded_component(X, x, nz.front(), side, cfg);
}

inline Analysis analyse_c0(const SumSpace& X, const SumVector& x, Side side, const SymmetryConfig& cfg) {
  const std::vector<std::size_t> nz = nonzero_entries(x);
  const double nx = sum_norm(X, x);
  std::vector<std::size_t> max_idx, other;
  for (std::size_t n = 1; n <= X.size(); ++n)
    (attains_max(entry_norm(X, x, n), nx) ? max_idx : other).push_back(n);
  Analysis a;
  if (side == Side::right) {
    if (!other.empty()) {
      std::size_t m = other.front();
      for (std::size_t n : other)
        if (entry_norm(X, x, n) < entry_norm(X, x, m)) m = n;
      SumVector y;
      for (std::size_t n : max_idx) y.set(n, (1.0 / entry_norm(X, x, n)) * *x.find(n));
      const ComponentSpace& s = X.component(m);
      const double xm = entry_norm(X, x, m);
      y.set(m, xm > 0.0 ? (-1.0 / xm) * *x.find(m) : -first_axis(s));
      return {TriBool::no, y, "c0-sign-flip"};
    }
    if (X.size() == 1) return embedded_component(X, x, nz.front(), side, cfg);
    a.verdict = TriBool::unknown;
    return a;
  }
  if (nz.size() >= 2) {
    const std::size_t n1 = max_idx.front();
    std::size_t m = nz.front() == n1 ? nz[1] : nz.front();
    SumVector y;
    y.set(m, (2.0 / entry_norm(X, x, m)) * *x.find(m));
    return {TriBool::no, y, "c0-max-escape"};
  }
  return embedded_component(X, x, nz.front(), side, cfg);
}

inline Analysis analyse_interior(const SumSpace& X, const SumVector& x, Side side, const SymmetryConfig& cfg) {
  const std::vector<std::size_t> nz = nonzero_entries(x);
  if (nz.size() == 1) return embedded_component(X, x, nz.front(), side, cfg);
  const double p = X.p();
  Analysis a;

  if (p == 2.0) {
    bool all_yes = true;
    for (std::size_t k = 0; k < nz.size(); ++k) {
      const std::size_t n = nz[k];
      const TriBool t = component_p_sip_symmetric(X.component(n), *x.find(n), 2.0, side, cfg);
      if (t == TriBool::yes) continue;
      all_yes = false;
      if (t == TriBool::no) {
        const std::size_t m = nz[(k + 1) % nz.size()];
        auto y = two_coordinate_probe(X, x, n, m, side, cfg);
        return {TriBool::no, y, y ? "sip-asymmetric-entry" : ""};
      }
    }
    a.verdict = all_yes ? TriBool::yes : TriBool::unknown;
    return a;
  }

  std::size_t big = nz.front(), small = nz.front();
  for (std::size_t n : nz) {
    if (entry_norm(X, x, n) > entry_norm(X, x, big)) big = n;
    if (entry_norm(X, x, n) < entry_norm(X, x, small)) small = n;
  }
  const double nb = entry_norm(X, x, big), ns = entry_norm(X, x, small);
  if (nb > ns * (1.0 + 1e-9)) {
    // y = (x_big, -alpha x_small) with alpha ||x_small||^p = ||x_big||^p
    // (left), or the root of order p - 1 of that ratio (right).
    const double ratio = std::pow(nb / ns, p);
    const double alpha = side == Side::left ? ratio : std::pow(ratio, 1.0 / (p - 1.0));
    SumVector y;
    y.set(big, *x.find(big));
    y.set(small, -alpha * *x.find(small));
    return {TriBool::no, y, "unequal-norms"};
  }
  if (nz.size() >= 3) {
    const double c = side == Side::left ? -0.5 : -std::pow(0.5, 1.0 / (p - 1.0));
    SumVector y;
    y.set(nz[0], *x.find(nz[0]));
    y.set(nz[1], c * *x.find(nz[1]));
    y.set(nz[2], c * *x.find(nz[2]));
    return {TriBool::no, y, "three-entries"};
  }
  // Two entries of equal norm.
  const std::size_t n = nz[0], m = nz[1];
  const bool smooth_entries = is_smooth_point(X.component(n), *x.find(n)) && is_smooth_point(X.component(m), *x.find(m));
  TriBool component_verdict = TriBool::yes;
  for (std::size_t k : nz) {
    const TriBool t = component_p_sip_symmetric(X.component(k), *x.find(k), p, side, cfg);
    if (t == TriBool::no) component_verdict = TriBool::no;
    if (t == TriBool::unknown && component_verdict == TriBool::yes) component_verdict = TriBool::unknown;
  }
  auto y = two_coordinate_probe(X, x, n, m, side, cfg);
  if (!y) y = two_coordinate_probe(X, x, m, n, side, cfg);
  if (y) return {TriBool::no, y, "two-entry-probe"};
  if (side == Side::left && !smooth_entries) return {TriBool::no, std::nullopt, ""};
  a.verdict = component_verdict;
  return a;
}

inline Analysis analyse(const SumSpace& X, const SumVector& x, Side side, const SymmetryConfig& cfg) {
  validate(X, x);
  if (x.is_zero()) throw DegenerateInputError("symmetric points are classified only for x != 0");
  if (X.is_sup()) throw ValidationError("symmetry is not provided for the l_inf container");
  if (X.is_l1()) return analyse_l1(X, x, side, cfg);
  if (X.is_c0()) return analyse_c0(X, x, side, cfg);
  return analyse_interior(X, x, side, cfg);
}

}  // namespace detail

// yes / no / unknown classification of x as a left- or right-symmetric point.
// Cases the structural analysis leaves open fall back to a grid search, which
// can only turn unknown into no.
inline TriBool symmetric_point(const SumSpace& X, const SumVector& x, Side side, const SymmetryConfig& cfg = {}) {
  const detail::Analysis a = detail::analyse(X, x, side, cfg);
  if (a.verdict != TriBool::unknown) return a.verdict;
  return detail::grid_search(X, x, side, cfg) ? TriBool::no : TriBool::unknown;
}

// An oracle-confirmed counterexample to the symmetry of x, or nullopt. Uses the
// explicit construction for the case at hand and falls back to a grid search.
inline std::optional<SymmetryWitness> falsify_symmetry(const SumSpace& X, const SumVector& x, Side side,
                                                       const SymmetryConfig& cfg = {}) {
  const detail::Analysis a = detail::analyse(X, x, side, cfg);
  if (a.verdict == TriBool::yes) return std::nullopt;
  if (a.candidate) {
    if (auto w = detail::confirm(X, x, *a.candidate, side, a.scheme, cfg)) return w;
  }
  return detail::grid_search(X, x, side, cfg);
}

}  // namespace lpsum
