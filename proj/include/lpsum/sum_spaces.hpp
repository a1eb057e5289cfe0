#pragma once

// l_p-direct sums (1 <= p < inf) and c_0-direct sums of component spaces,
// restricted to finitely supported elements.
//
// A SumSpace declares a finite list of components X_1..X_N. Elements carry a
// sparse list of (index, component vector) entries; a declared index without
// an entry, or with an exactly-zero vector, is a zero coordinate. The
// p = 1 and p = 0 case splits ("some coordinate vanishes", "the maximum is
// attained once") are decided against the declared list, so appending a
// component can change D(x).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "lpsum/component_geometry.hpp"
#include "lpsum/errors.hpp"
#include "lpsum/interval.hpp"
#include "lpsum/tolerance.hpp"

namespace lpsum {

// Sparse sequence {x_n}; indices are 1-based and strictly increasing.
template <class Tag>
struct Sequence {
  struct Entry {
    std::size_t index;
    Coords<Tag> value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::vector<Entry> entries;

  Sequence() = default;
  Sequence(std::initializer_list<Entry> e) : entries(e) {}
  explicit Sequence(std::vector<Entry> e) : entries(std::move(e)) {}

  const Coords<Tag>* find(std::size_t index) const {
    for (const Entry& e : entries)
      if (e.index == index) return &e.value;
    return nullptr;
  }

  // Entry at `index`, or the zero vector of dimension d.
  Coords<Tag> at_or_zero(std::size_t index, std::size_t d) const {
    const Coords<Tag>* c = find(index);
    return c ? *c : Coords<Tag>::zero(d);
  }

  // Inserts or overwrites, keeping indices sorted.
  void set(std::size_t index, Coords<Tag> value) {
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const Entry& e, std::size_t i) { return e.index < i; });
    if (it != entries.end() && it->index == index)
      it->value = std::move(value);
    else
      entries.insert(it, Entry{index, std::move(value)});
  }

  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.value.is_zero(); });
  }

  // Indices whose entry is non-zero.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (const Entry& e : entries)
      if (!e.value.is_zero()) s.push_back(e.index);
    return s;
  }

  Sequence& operator*=(double s) {
    for (Entry& e : entries) e.value *= s;
    return *this;
  }
  friend Sequence operator*(double s, Sequence a) { return a *= s; }

  friend Sequence operator+(const Sequence& a, const Sequence& b) {
    Sequence out = a;
    for (const Entry& e : b.entries) {
      if (const Coords<Tag>* c = out.find(e.index))
        out.set(e.index, *c + e.value);
      else
        out.set(e.index, e.value);
    }
    return out;
  }
  friend Sequence operator-(const Sequence& a, const Sequence& b) { return a + (-1.0) * b; }

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

using SumVector = Sequence<VectorTag>;
using SumFunctional = Sequence<FunctionalTag>;

// Exponent p of the direct sum: 0 encodes the c_0-sum, inf is admitted only
// as the dual container of an l_1-sum.
class SumSpace {
 public:
  SumSpace(double p, std::vector<ComponentSpace> components) : p_(p), components_(std::move(components)) {
    if (components_.empty()) throw ValidationError("a direct sum needs at least one component");
    if (!(p_ == 0.0 || p_ >= 1.0) || std::isnan(p_))
      throw ValidationError("direct-sum exponent must be 0 (c_0) or lie in [1, inf]");
  }

  static SumSpace c0(std::vector<ComponentSpace> c) { return SumSpace(0.0, std::move(c)); }

  double p() const { return p_; }
  bool is_c0() const { return p_ == 0.0; }
  bool is_l1() const { return p_ == 1.0; }
  bool is_sup() const { return std::isinf(p_); }
  // 1 < p < inf
  bool is_interior() const { return p_ > 1.0 && !std::isinf(p_); }

  // Conjugate exponent; q = 1 for the c_0-sum by convention.
  double q() const {
    if (is_c0()) return 1.0;
    if (is_l1()) return std::numeric_limits<double>::infinity();
    if (is_sup()) throw ValidationError("the l_inf container has no dual in this library");
    return p_ / (p_ - 1.0);
  }

  std::size_t size() const { return components_.size(); }
  const std::vector<ComponentSpace>& components() const { return components_; }
  // 1-based.
  const ComponentSpace& component(std::size_t index) const {
    if (index < 1 || index > components_.size()) {
      std::ostringstream os;
      os << "index " << index << " out of range 1.." << components_.size();
      throw ValidationError(os.str());
    }
    return components_[index - 1];
  }

 private:
  double p_;
  std::vector<ComponentSpace> components_;
};

namespace detail {

template <class Tag>
void validate_sequence(const SumSpace& X, const Sequence<Tag>& x) {
  std::size_t prev = 0;
  for (const auto& e : x.entries) {
    if (e.index <= prev) throw ValidationError("entry indices must be strictly increasing and positive");
    check_dim(X.component(e.index), e.value.size());
    prev = e.index;
  }
}

// Combines per-coordinate norms with exponent p (max for p in {0, inf}).
inline double combine_norms(const std::vector<double>& norms, double p) {
  double m = 0.0;
  for (double v : norms) m = std::max(m, v);
  if (p == 0.0 || std::isinf(p) || m == 0.0) return m;
  if (p == 1.0) {
    double s = 0.0;
    for (double v : norms) s += v;
    return s;
  }
  double s = 0.0;
  for (double v : norms) s += std::pow(v / m, p);
  return m * std::pow(s, 1.0 / p);
}

inline bool attains_max(double value, double max) { return value >= max * (1.0 - kGeomTol); }

}  // namespace detail

inline void validate(const SumSpace& X, const SumVector& x) { detail::validate_sequence(X, x); }
inline void validate(const SumSpace& X, const SumFunctional& f) { detail::validate_sequence(X, f); }

inline double sum_norm(const SumSpace& X, const SumVector& x) {
  validate(X, x);
  std::vector<double> n;
  n.reserve(x.entries.size());
  for (const auto& e : x.entries) n.push_back(norm(X.component(e.index), e.value));
  return detail::combine_norms(n, X.p());
}

inline SumSpace dual_sum_space(const SumSpace& X) {
  std::vector<ComponentSpace> d;
  d.reserve(X.size());
  for (const ComponentSpace& s : X.components()) d.push_back(dual_space(s));
  return SumSpace(X.q(), std::move(d));
}

// Norm of f in the dual sum: component dual norms combined with exponent q.
inline double dual_sum_norm(const SumSpace& X, const SumFunctional& f) {
  validate(X, f);
  std::vector<double> n;
  n.reserve(f.entries.size());
  for (const auto& e : f.entries) n.push_back(dual_norm(X.component(e.index), e.value));
  return detail::combine_norms(n, X.q());
}

// f(x) = sum_n f_n(x_n) over the common indices.
inline double apply(const SumFunctional& f, const SumVector& x) {
  double s = 0.0;
  for (const auto& e : f.entries)
    if (const ComponentVector* v = x.find(e.index)) s += pair(e.value, *v);
  return s;
}

// Unit vector x with f(x) > ||f||_q - eps. With finite-dimensional
// components each coordinate is normed exactly, so f(x) = ||f||_q.
inline SumVector norming_element(const SumSpace& X, const SumFunctional& f, double eps) {
  validate(X, f);
  if (!(eps > 0.0)) throw ValidationError("norming_element needs eps > 0");
  if (f.is_zero()) throw DegenerateInputError("the zero functional has no norming element");
  SumVector out;
  if (X.is_l1()) {
    // q = inf: concentrate on a coordinate of maximal dual norm.
    std::size_t best = 0;
    double best_norm = -1.0;
    for (const auto& e : f.entries) {
      const double n = dual_norm(X.component(e.index), e.value);
      if (n > best_norm) {
        best_norm = n;
        best = e.index;
      }
    }
    out.set(best, norming_vector(X.component(best), *f.find(best)));
    return out;
  }
  if (X.is_c0()) {
    // q = 1: every coordinate at full (unit) norm.
    for (const auto& e : f.entries)
      if (!e.value.is_zero()) out.set(e.index, norming_vector(X.component(e.index), e.value));
    return out;
  }
  if (!X.is_interior()) throw ValidationError("norming_element: unsupported exponent");
  // y_n = (||f_n|| / ||f||_q)^(q-1) x_n with x_n a unit norming vector of f_n.
  const double q = X.q();
  const double fq = dual_sum_norm(X, f);
  for (const auto& e : f.entries) {
    if (e.value.is_zero()) continue;
    const ComponentSpace& s = X.component(e.index);
    const double scale = std::pow(dual_norm(s, e.value) / fq, q - 1.0);
    out.set(e.index, scale * norming_vector(s, e.value));
  }
  return out;
}

// Exact description of J(x).
//
//   1 < p < inf : f_n = c_n g_n, g_n in J(x_n), c_n = (||x_n|| / ||x||)^(p-1)
//                 on supp(x); f_n = 0 elsewhere.
//   p = 1       : f_n in J(x_n) on supp(x); ||f_n|| <= 1 on every other
//                 declared index (`free_ball`).
//   p = 0       : sum of lambda_n g_n over the max-attaining indices with
//                 lambda_n >= 0 summing to 1, g_n in J(x_n).
struct SumJDescription {
  struct Coordinate {
    std::size_t index;
    double scale;
    ComponentVector vector;
    JDescription j;
  };

  double p = 2.0;
  std::vector<Coordinate> supported;
  std::vector<std::size_t> free_ball;

  bool c0_convex_weights() const { return p == 0.0; }

  // Lexicographically smallest extreme functional per coordinate; the c_0
  // case puts all weight on the first max-attaining index, and free-ball
  // coordinates of an l_1-sum are left at zero.
  SumFunctional canonical() const {
    SumFunctional f;
    for (const Coordinate& c : supported) {
      f.set(c.index, c.scale * c.j.canonical());
      if (c0_convex_weights()) break;
    }
    return f;
  }
};

inline SumJDescription support_functionals(const SumSpace& X, const SumVector& x) {
  validate(X, x);
  if (X.is_sup()) throw ValidationError("support functionals are not provided for the l_inf container");
  if (x.is_zero()) throw DegenerateInputError("support functionals are defined only for non-zero elements");
  const double nx = sum_norm(X, x);
  SumJDescription out;
  out.p = X.p();
  for (const auto& e : x.entries) {
    if (e.value.is_zero()) continue;
    const ComponentSpace& s = X.component(e.index);
    const double nn = norm(s, e.value);
    if (X.is_c0() && !detail::attains_max(nn, nx)) continue;
    const double scale = X.is_interior() ? std::pow(nn / nx, X.p() - 1.0) : 1.0;
    out.supported.push_back({e.index, scale, e.value, support_set(s, e.value)});
  }
  if (X.is_l1()) {
    for (std::size_t n = 1; n <= X.size(); ++n) {
      const ComponentVector* v = x.find(n);
      if (!v || v->is_zero()) out.free_ball.push_back(n);
    }
  }
  return out;
}

inline SumFunctional canonical_support(const SumSpace& X, const SumVector& x) {
  return support_functionals(X, x).canonical();
}

// Definitional test: ||f||_q = 1 and f(x) = ||x||, both within tol.
inline bool is_support(const SumSpace& X, const SumVector& x, const SumFunctional& f, double tol = kGeomTol) {
  validate(X, f);
  if (x.is_zero()) throw DegenerateInputError("is_support needs a non-zero element");
  const double nx = sum_norm(X, x);
  const double nf = dual_sum_norm(X, f);
  return nf >= 1.0 - tol && nf <= 1.0 + tol && apply(f, x) >= nx - tol * std::max(1.0, nx);
}

// Membership in J(x) via the coordinatewise characterisation rather than the
// definition. Used to cross-check is_support.
inline bool satisfies_support_characterization(const SumSpace& X, const SumVector& x, const SumFunctional& f,
                                               double tol = kGeomTol) {
  validate(X, f);
  const SumJDescription j = support_functionals(X, x);
  auto listed = [&](std::size_t n) -> const SumJDescription::Coordinate* {
    for (const auto& c : j.supported)
      if (c.index == n) return &c;
    return nullptr;
  };
  double weight = 0.0;
  for (std::size_t n = 1; n <= X.size(); ++n) {
    const ComponentSpace& s = X.component(n);
    const ComponentFunctional fn = f.at_or_zero(n, s.dim());
    const double nf = dual_norm(s, fn);
    if (const auto* c = listed(n)) {
      if (X.is_c0()) {
        weight += nf;
        if (nf > tol && !in_support_set(s, c->vector, (1.0 / nf) * fn, tol)) return false;
      } else if (!in_support_set(s, c->vector, (1.0 / c->scale) * fn, tol)) {
        return false;
      }
    } else if (X.is_l1() && std::find(j.free_ball.begin(), j.free_ball.end(), n) != j.free_ball.end()) {
      if (nf > 1.0 + tol) return false;
    } else if (nf > tol) {
      return false;
    }
  }
  return !X.is_c0() || std::abs(weight - 1.0) <= tol;
}

// {f(y) : f in J(x)}.
inline Interval value_set(const SumSpace& X, const SumVector& x, const SumVector& y) {
  validate(X, y);
  const SumJDescription j = support_functionals(X, x);
  auto coordinate_values = [&](const SumJDescription::Coordinate& c) {
    const ComponentSpace& s = X.component(c.index);
    return value_interval(s, c.vector, y.at_or_zero(c.index, s.dim()));
  };
  if (X.is_c0()) {
    std::optional<Interval> hull;
    for (const auto& c : j.supported) {
      const Interval v = coordinate_values(c);
      hull = hull ? Interval::hull(*hull, v) : v;
    }
    return *hull;
  }
  Interval total = Interval::point(0.0);
  for (const auto& c : j.supported) total += c.scale * coordinate_values(c);
  for (std::size_t n : j.free_ball) {
    const ComponentSpace& s = X.component(n);
    if (const ComponentVector* v = y.find(n)) {
      const double r = norm(s, *v);
      total += Interval{-r, r};
    }
  }
  return total;
}

struct EnumerationLimits {
  std::size_t max_points = std::size_t{1} << 16;
};

// Extreme points of J(x):
//   1 < p < inf : products of scaled Ext J(x_n) over supp(x);
//   p = 1       : products of Ext J(x_n) on supp(x) with Ext B_{X_n*} on
//                 the remaining declared indices;
//   p = 0       : g e_{n0} with n0 max-attaining and g in Ext J(x_{n0}).
// Throws NotEnumerableError when a required dual ball is strictly convex or
// the product exceeds the limit.
inline std::vector<SumFunctional> support_ext(const SumSpace& X, const SumVector& x,
                                              const EnumerationLimits& limits = {}) {
  const SumJDescription j = support_functionals(X, x);
  if (X.is_c0()) {
    std::vector<SumFunctional> out;
    for (const auto& c : j.supported) {
      for (const ComponentFunctional& g : c.j.extreme) {
        SumFunctional f;
        f.set(c.index, g);
        out.push_back(std::move(f));
      }
    }
    return out;
  }
  std::vector<std::pair<std::size_t, std::vector<ComponentFunctional>>> factors;
  for (const auto& c : j.supported) {
    std::vector<ComponentFunctional> choices;
    for (const ComponentFunctional& g : c.j.extreme) choices.push_back(c.scale * g);
    factors.emplace_back(c.index, std::move(choices));
  }
  for (std::size_t n : j.free_ball) {
    auto verts = dual_ball_vertices(X.component(n));
    if (!verts) {
      std::ostringstream os;
      os << "dual ball of component " << n << " (" << X.component(n).describe() << ") has infinitely many extreme points";
      throw NotEnumerableError(os.str());
    }
    factors.emplace_back(n, std::move(*verts));
  }
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  double count = 1.0;
  for (const auto& fct : factors) count *= static_cast<double>(fct.second.size());
  if (count > static_cast<double>(limits.max_points)) throw NotEnumerableError("support_ext: too many extreme points");

  std::vector<SumFunctional> out;
  SumFunctional cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == factors.size()) {
      out.push_back(cur);
      return;
    }
    for (const ComponentFunctional& g : factors[k].second) {
      cur.set(factors[k].first, g);
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

// D(x) = diam J(x) in the dual norm.
inline double diameter(const SumSpace& X, const SumVector& x) {
  const SumJDescription j = support_functionals(X, x);
  if (X.is_interior()) {
    // (sum_n (||x_n|| / ||x||)^p D(x_n)^q)^(1/q); scale_n^q = (||x_n||/||x||)^p.
    const double q = X.q();
    double s = 0.0;
    for (const auto& c : j.supported) {
      const double dn = d_component(X.component(c.index), c.vector);
      if (dn > 0.0) s += std::pow(c.scale, q) * std::pow(dn, q);
    }
    return std::pow(s, 1.0 / q);
  }
  if (X.is_l1()) {
    if (!j.free_ball.empty()) return 2.0;
    double m = 0.0;
    for (const auto& c : j.supported) m = std::max(m, d_component(X.component(c.index), c.vector));
    return m;
  }
  // c_0
  if (j.supported.size() != 1) return 2.0;
  return d_component(X.component(j.supported.front().index), j.supported.front().vector);
}

// sup of D over the non-zero elements.
inline double cal_d(const SumSpace& X) {
  if (X.is_interior()) {
    double m = 0.0;
    for (const ComponentSpace& s : X.components()) m = std::max(m, cal_d_component(s));
    return m;
  }
  if (X.is_sup()) throw ValidationError("cal_d is not provided for the l_inf container");
  // A single declared component makes the sum isometric to that component;
  // with two or more there is an element with a zero coordinate (p = 1) or
  // with two max-attaining coordinates (p = 0).
  if (X.size() == 1) return cal_d_component(X.components().front());
  return 2.0;
}

struct SmoothnessReport {
  bool smooth = false;
  bool eps_smooth = false;
  double D = 0.0;
};

// Smoothness decided from the coordinates alone:
//   1 < p < inf : every non-zero coordinate is a smooth point;
//   p = 1       : every declared coordinate is non-zero and smooth;
//   p = 0       : the max norm is attained once, at a smooth point.
inline bool smooth_by_structure(const SumSpace& X, const SumVector& x) {
  validate(X, x);
  if (x.is_zero()) throw DegenerateInputError("smoothness is defined only for non-zero elements");
  const double nx = sum_norm(X, x);
  if (X.is_interior() || X.is_l1()) {
    for (std::size_t n = 1; n <= X.size(); ++n) {
      const ComponentVector* v = x.find(n);
      if (!v || v->is_zero()) {
        if (X.is_l1()) return false;
        continue;
      }
      if (!is_smooth_point(X.component(n), *v)) return false;
    }
    return true;
  }
  std::size_t count = 0;
  bool smooth_at_max = false;
  for (const auto& e : x.entries) {
    if (e.value.is_zero()) continue;
    if (detail::attains_max(norm(X.component(e.index), e.value), nx)) {
      ++count;
      smooth_at_max = is_smooth_point(X.component(e.index), e.value);
    }
  }
  return count == 1 && smooth_at_max;
}

inline SmoothnessReport smoothness_report(const SumSpace& X, const SumVector& x, double eps) {
  if (!(eps >= 0.0 && eps < 2.0)) throw ValidationError("eps must lie in [0, 2)");
  SmoothnessReport r;
  r.D = diameter(X, x);
  r.smooth = r.D == 0.0;
  r.eps_smooth = r.D <= eps;
  return r;
}

}  // namespace lpsum
