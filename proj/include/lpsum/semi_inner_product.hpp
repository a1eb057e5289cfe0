#pragma once

// Semi-inner products [x, y] = lambda * Psi([x])(y), where x = lambda x0 with
// x0 the canonical unit representative of the line [x] and Psi picks a
// support functional of x0.

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lpsum/errors.hpp"
#include "lpsum/interval.hpp"
#include "lpsum/orthogonality.hpp"
#include "lpsum/sum_spaces.hpp"
#include "lpsum/tolerance.hpp"

namespace lpsum {

struct CanonicalLine {
  SumVector unit;  // first non-zero coordinate positive, norm 1
  double lambda;   // x = lambda * unit
};

inline CanonicalLine canonical_line(const SumSpace& X, const SumVector& x) {
  validate(X, x);
  double sigma = 0.0;
  for (const auto& e : x.entries) {
    for (std::size_t i = 0; i < e.value.size() && sigma == 0.0; ++i) {
      if (e.value[i] != 0.0) sigma = e.value[i] > 0.0 ? 1.0 : -1.0;
    }
    if (sigma != 0.0) break;
  }
  if (sigma == 0.0) throw DegenerateInputError("the zero vector spans no line");
  const double lambda = sigma * sum_norm(X, x);
  return {(1.0 / lambda) * x, lambda};
}

// Deterministic choice of support functional per line. Unpinned lines get the
// canonical (lexicographically smallest extreme) support functional of their
// unit representative.
class SipSelector {
 public:
  // Fix Psi on the line through x; f must be a support functional of x.
  void pin(const SumSpace& X, const SumVector& x, const SumFunctional& f) {
    const CanonicalLine line = canonical_line(X, x);
    if (!is_support(X, x, f, 1e-8)) throw ValidationError("pinned functional is not a support functional of x");
    const double sigma = line.lambda > 0.0 ? 1.0 : -1.0;
    for (auto& [unit, g] : pins_) {
      if (same_point(unit, line.unit)) {
        g = sigma * f;
        return;
      }
    }
    pins_.emplace_back(line.unit, sigma * f);
  }

  SumFunctional select(const SumSpace& X, const SumVector& x) const {
    const CanonicalLine line = canonical_line(X, x);
    for (const auto& [unit, g] : pins_)
      if (same_point(unit, line.unit)) return g;
    return canonical_support(X, line.unit);
  }

  std::size_t pinned() const { return pins_.size(); }

 private:
  static bool same_point(const SumVector& a, const SumVector& b) {
    const SumVector d = a - b;
    for (const auto& e : d.entries)
      for (std::size_t i = 0; i < e.value.size(); ++i)
        if (std::abs(e.value[i]) > 1e-12) return false;
    return true;
  }

  std::vector<std::pair<SumVector, SumFunctional>> pins_;
};

inline double sip(const SumSpace& X, const SipSelector& sel, const SumVector& x, const SumVector& y) {
  validate(X, y);
  if (x.is_zero()) return 0.0;
  const CanonicalLine line = canonical_line(X, x);
  return line.lambda * apply(sel.select(X, x), y);
}

// All values of [x, y] over every possible selector: ||x|| {f(y) : f in J(x)}.
inline Interval sip_value_interval(const SumSpace& X, const SumVector& x, const SumVector& y) {
  if (x.is_zero()) throw DegenerateInputError("sip_value_interval needs x != 0");
  return sum_norm(X, x) * value_set(X, x, y);
}

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

namespace detail {

// v |v / (||x|| ||y||)|^(p-2), monotone increasing in v; 0 maps to 0.
inline double commuting_image(double v, double nx, double ny, double p) {
  if (v == 0.0) return 0.0;
  return v * std::pow(std::abs(v) / (nx * ny), p - 2.0);
}

inline SumSpace single(const ComponentSpace& s) { return SumSpace(2.0, {s}); }
inline SumVector embed(const ComponentVector& v, std::size_t index = 1) { return SumVector{{index, v}}; }

}  // namespace detail

// Left: every achievable [x, y] has its p-image among the achievable [y, x].
// Right: every achievable [y, x] is the p-image of an achievable [x, y].
inline bool p_sip_commuting(const SumSpace& X, const SumVector& x, const SumVector& y, double p, Side side) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ValidationError("p_sip_commuting needs 1 < p < inf");
  if (x.is_zero() || y.is_zero()) throw DegenerateInputError("p_sip_commuting needs non-zero x and y");
  const double nx = sum_norm(X, x), ny = sum_norm(X, y);
  const Interval v = sip_value_interval(X, x, y);
  const Interval w = sip_value_interval(X, y, x);
  const Interval image{detail::commuting_image(v.lo, nx, ny, p), detail::commuting_image(v.hi, nx, ny, p)};
  const double slack = relative_slack(nx * ny);
  return side == Side::left ? w.contains(image, slack) : image.contains(w, slack);
}

inline bool p_sip_commuting(const ComponentSpace& s, const ComponentVector& x, const ComponentVector& y, double p,
                            Side side) {
  return p_sip_commuting(detail::single(s), detail::embed(x), detail::embed(y), p, side);
}

// sum over supp(x) of ||x_n||^(p-2) [x_n, y_n]_n, with the component s.i.p.
// on X_n given by selectors[n - 1] acting on X_n as a one-term sum.
inline double sip_sum_form(const SumSpace& X, const std::vector<SipSelector>& selectors, const SumVector& x,
                           const SumVector& y) {
  if (!X.is_interior()) throw ValidationError("sip_sum_form needs 1 < p < inf");
  if (selectors.size() != X.size()) throw ValidationError("one selector per component is required");
  validate(X, x);
  validate(X, y);
  double total = 0.0;
  for (const auto& e : x.entries) {
    if (e.value.is_zero()) continue;
    const ComponentSpace& s = X.component(e.index);
    const SumSpace one = detail::single(s);
    const double bracket = sip(one, selectors[e.index - 1], detail::embed(e.value),
                               detail::embed(y.at_or_zero(e.index, s.dim())));
    total += std::pow(norm(s, e.value), X.p() - 2.0) * bracket;
  }
  return total;
}

// For x perp_B y, component selectors making sip_sum_form(x, y) vanish: pin
// each line [x_n] to h_n = f_n / c_n where f is the orthogonality witness
// functional. nullopt when x is not orthogonal to y.
inline std::optional<std::vector<SipSelector>> orthogonality_selectors(const SumSpace& X, const SumVector& x,
                                                                       const SumVector& y) {
  if (!X.is_interior()) throw ValidationError("orthogonality_selectors needs 1 < p < inf");
  std::vector<SipSelector> out(X.size());
  if (x.is_zero()) return out;
  const std::optional<SumFunctional> f = orthogonality_witness_functional(X, x, y);
  if (!f) return std::nullopt;
  const SumJDescription j = support_functionals(X, x);
  for (const auto& c : j.supported) {
    const ComponentSpace& s = X.component(c.index);
    const SumFunctional h{{1, (1.0 / c.scale) * *f->find(c.index)}};
    out[c.index - 1].pin(detail::single(s), detail::embed(c.vector), h);
  }
  return out;
}

}  // namespace lpsum
