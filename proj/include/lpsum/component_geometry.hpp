#pragma once

// Finite-dimensional real normed spaces: the atoms of a direct sum.
//
// Five kinds are supported. euclidean(d) and lr(d, r) with 1 < r < inf are
// smooth (every non-zero vector has exactly one support functional).
// l1(d), linf(d) and centrally symmetric polygons in the plane are
// polyhedral; their support sets are faces of the dual ball, described by
// the dual-ball vertices they contain.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lpsum/errors.hpp"
#include "lpsum/interval.hpp"
#include "lpsum/tolerance.hpp"

namespace lpsum {

// Dense coordinate array tagged by the role it plays, so that vectors and
// functionals of the same space cannot be mixed up silently.
template <class Tag>
struct Coords {
  std::vector<double> coords;

  Coords() = default;
  explicit Coords(std::vector<double> c) : coords(std::move(c)) {}
  Coords(std::initializer_list<double> c) : coords(c) {}

  static Coords zero(std::size_t d) { return Coords(std::vector<double>(d, 0.0)); }

  std::size_t size() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](double c) { return c == 0.0; });
  }

  Coords& operator+=(const Coords& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  Coords& operator*=(double s) {
    for (double& c : coords) c *= s;
    return *this;
  }

  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(double s, Coords a) { return a *= s; }
  friend Coords operator-(Coords a) { return a *= -1.0; }

  friend bool operator==(const Coords&, const Coords&) = default;
  friend auto operator<=>(const Coords& a, const Coords& b) { return a.coords <=> b.coords; }

 private:
  void check_same_size(const Coords& o) const {
    if (o.size() != size()) throw ValidationError("coordinate length mismatch");
  }
};

struct VectorTag {};
struct FunctionalTag {};

using ComponentVector = Coords<VectorTag>;
using ComponentFunctional = Coords<FunctionalTag>;

// Standard coordinate pairing f(v).
inline double pair(const ComponentFunctional& f, const ComponentVector& v) {
  if (f.size() != v.size()) throw ValidationError("functional/vector dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += f[i] * v[i];
  return s;
}

// A functional on X is a vector of X*, and vice versa.
inline ComponentFunctional as_functional(const ComponentVector& v) { return ComponentFunctional(v.coords); }
inline ComponentVector as_vector(const ComponentFunctional& f) { return ComponentVector(f.coords); }

using Point2 = std::array<double, 2>;

enum class Kind { euclidean, lr, l1, linf, polygon };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::euclidean: return "euclidean";
    case Kind::lr: return "lr";
    case Kind::l1: return "l1";
    case Kind::linf: return "linf";
    case Kind::polygon: return "polygon";
  }
  return "?";
}

namespace detail {

inline double cross(const Point2& a, const Point2& b) { return a[0] * b[1] - a[1] * b[0]; }
inline double dot(const Point2& a, const Point2& b) { return a[0] * b[0] + a[1] * b[1]; }

// Vertex g of the polar polygon dual to the edge [a, b]: g(a) = g(b) = 1.
inline Point2 polar_vertex(const Point2& a, const Point2& b) {
  const double det = cross(a, b);
  return {(b[1] - a[1]) / det, (a[0] - b[0]) / det};
}

inline void validate_polygon(const std::vector<Point2>& v) {
  const std::size_t n = v.size();
  if (n < 4 || n % 2 != 0) throw ValidationError("polygon needs an even number (>= 4) of vertices");
  double scale = 0.0;
  for (const Point2& p : v) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1])) throw ValidationError("polygon vertex not finite");
    scale = std::max({scale, std::abs(p[0]), std::abs(p[1])});
  }
  const std::size_t h = n / 2;
  for (std::size_t i = 0; i < h; ++i) {
    if (std::abs(v[i][0] + v[i + h][0]) > 1e-12 * scale || std::abs(v[i][1] + v[i + h][1]) > 1e-12 * scale)
      throw ValidationError("polygon is not centrally symmetric (v[i + n/2] must equal -v[i])");
  }
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    const Point2& c = v[(i + 2) % n];
    if (!(cross(a, b) > 0.0)) throw ValidationError("polygon must be counterclockwise around the origin");
    const Point2 e1{b[0] - a[0], b[1] - a[1]};
    const Point2 e2{c[0] - b[0], c[1] - b[1]};
    if (!(cross(e1, e2) > 0.0)) throw ValidationError("polygon vertices are not in strictly convex position");
    winding += std::atan2(cross(a, b), dot(a, b));
  }
  if (std::abs(winding - 2.0 * std::numbers::pi) > 1e-9)
    throw ValidationError("polygon winds around the origin more than once");
}

}  // namespace detail

class ComponentSpace {
 public:
  static ComponentSpace euclidean(std::size_t d) { return ComponentSpace(Kind::euclidean, d, 2.0); }

  static ComponentSpace lr(std::size_t d, double r) {
    if (!(r > 1.0) || !std::isfinite(r))
      throw ValidationError("lr space needs 1 < r < inf (use l1 / linf for the endpoints)");
    return ComponentSpace(Kind::lr, d, r);
  }

  static ComponentSpace l1(std::size_t d) { return ComponentSpace(Kind::l1, d, 1.0); }
  static ComponentSpace linf(std::size_t d) {
    return ComponentSpace(Kind::linf, d, std::numeric_limits<double>::infinity());
  }

  // Vertices in counterclockwise order; the list must be centrally
  // symmetric with v[i + n/2] = -v[i].
  static ComponentSpace polygon(std::vector<Point2> vertices) {
    detail::validate_polygon(vertices);
    ComponentSpace s(Kind::polygon, 2, 0.0);
    const std::size_t n = vertices.size();
    s.polar_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.polar_.push_back(detail::polar_vertex(vertices[i], vertices[(i + 1) % n]));
    s.vertices_ = std::move(vertices);
    return s;
  }

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  // Exponent for lr; 1 for l1, inf for linf, 2 for euclidean.
  double r() const { return r_; }
  const std::vector<Point2>& vertices() const { return vertices_; }
  // polar_vertices()[i] is dual to the edge [vertices()[i], vertices()[i+1]].
  const std::vector<Point2>& polar_vertices() const { return polar_; }

  bool polyhedral() const { return kind_ == Kind::l1 || kind_ == Kind::linf || kind_ == Kind::polygon; }
  // Every non-zero vector is a smooth point.
  bool smooth() const { return !polyhedral() || dim_ == 1; }

  std::string describe() const {
    std::ostringstream os;
    os << kind_name(kind_) << '(' << dim_;
    if (kind_ == Kind::lr) os << ", r=" << r_;
    if (kind_ == Kind::polygon) os << ", " << vertices_.size() << " vertices";
    os << ')';
    return os.str();
  }

 private:
  ComponentSpace(Kind k, std::size_t d, double r) : kind_(k), dim_(d), r_(r) {
    if (d == 0) throw ValidationError("component spaces must have positive dimension");
  }

  Kind kind_;
  std::size_t dim_;
  double r_;
  std::vector<Point2> vertices_;
  std::vector<Point2> polar_;
};

namespace detail {

inline void check_dim(const ComponentSpace& s, std::size_t n) {
  if (n != s.dim()) {
    std::ostringstream os;
    os << "dimension mismatch: " << s.describe() << " received " << n << " coordinates";
    throw ValidationError(os.str());
  }
}

inline double max_abs(const std::vector<double>& c) {
  double m = 0.0;
  for (double x : c) m = std::max(m, std::abs(x));
  return m;
}

// (sum |c_i|^r)^(1/r), scaled to avoid overflow/underflow.
inline double lr_norm(const std::vector<double>& c, double r) {
  const double m = max_abs(c);
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double x : c) s += std::pow(std::abs(x) / m, r);
  return m * std::pow(s, 1.0 / r);
}

inline double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

inline double conjugate(double r) {
  if (r == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(r)) return 1.0;
  return r / (r - 1.0);
}

}  // namespace detail

inline double norm(const ComponentSpace& s, const ComponentVector& v) {
  detail::check_dim(s, v.size());
  const auto& c = v.coords;
  switch (s.kind()) {
    case Kind::euclidean: return detail::lr_norm(c, 2.0);
    case Kind::lr: return detail::lr_norm(c, s.r());
    case Kind::l1: {
      double t = 0.0;
      for (double x : c) t += std::abs(x);
      return t;
    }
    case Kind::linf: return detail::max_abs(c);
    case Kind::polygon: {
      // Minkowski gauge: the ball is the intersection of the half-planes g_i(v) <= 1.
      double g = 0.0;
      for (const Point2& q : s.polar_vertices()) g = std::max(g, q[0] * c[0] + q[1] * c[1]);
      return g;
    }
  }
  return 0.0;
}

inline ComponentSpace dual_space(const ComponentSpace& s) {
  switch (s.kind()) {
    case Kind::euclidean: return s;
    case Kind::lr: return ComponentSpace::lr(s.dim(), detail::conjugate(s.r()));
    case Kind::l1: return ComponentSpace::linf(s.dim());
    case Kind::linf: return ComponentSpace::l1(s.dim());
    case Kind::polygon: return ComponentSpace::polygon(s.polar_vertices());
  }
  return s;
}

// Operator norm sup{f(v) : norm(v) <= 1}.
inline double dual_norm(const ComponentSpace& s, const ComponentFunctional& f) {
  detail::check_dim(s, f.size());
  const auto& c = f.coords;
  switch (s.kind()) {
    case Kind::euclidean: return detail::lr_norm(c, 2.0);
    case Kind::lr: return detail::lr_norm(c, detail::conjugate(s.r()));
    case Kind::l1: return detail::max_abs(c);
    case Kind::linf: {
      double t = 0.0;
      for (double x : c) t += std::abs(x);
      return t;
    }
    case Kind::polygon: {
      // Support function of the primal polygon; attained at a vertex.
      double m = -std::numeric_limits<double>::infinity();
      for (const Point2& p : s.vertices()) m = std::max(m, p[0] * c[0] + p[1] * c[1]);
      return m;
    }
  }
  return 0.0;
}

// Exact description of J(v): a single functional for smooth points, or the
// dual-ball vertices lying on the exposed face for polyhedral kinds.
struct JDescription {
  enum class Form { singleton, polytope };

  Form form = Form::singleton;
  // Sorted lexicographically; never empty.
  std::vector<ComponentFunctional> extreme;

  bool is_singleton() const { return extreme.size() == 1; }
  // Lexicographically smallest extreme functional.
  const ComponentFunctional& canonical() const { return extreme.front(); }
};

// Vertices of the dual unit ball, or nullopt when the dual ball is strictly
// convex (its extreme points form a sphere).
inline std::optional<std::vector<ComponentFunctional>> dual_ball_vertices(const ComponentSpace& s) {
  const std::size_t d = s.dim();
  std::vector<ComponentFunctional> out;
  if (d == 1) {
    out.push_back(ComponentFunctional{-1.0});
    out.push_back(ComponentFunctional{1.0});
    return out;
  }
  switch (s.kind()) {
    case Kind::euclidean:
    case Kind::lr: return std::nullopt;
    case Kind::l1: {
      if (d > 20) throw NotEnumerableError("l1 dual ball has too many vertices to list");
      for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        ComponentFunctional g = ComponentFunctional::zero(d);
        for (std::size_t i = 0; i < d; ++i) g[i] = (mask >> i) & 1 ? -1.0 : 1.0;
        out.push_back(std::move(g));
      }
      break;
    }
    case Kind::linf:
      for (std::size_t i = 0; i < d; ++i) {
        for (double sg : {1.0, -1.0}) {
          ComponentFunctional g = ComponentFunctional::zero(d);
          g[i] = sg;
          out.push_back(std::move(g));
        }
      }
      break;
    case Kind::polygon:
      for (const Point2& q : s.polar_vertices()) out.push_back(ComponentFunctional{q[0], q[1]});
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline JDescription support_set(const ComponentSpace& s, const ComponentVector& v) {
  detail::check_dim(s, v.size());
  if (v.is_zero()) throw DegenerateInputError("support functionals are defined only for non-zero vectors");
  const double nv = norm(s, v);
  const std::size_t d = s.dim();
  JDescription out;

  switch (s.kind()) {
    case Kind::euclidean:
    case Kind::lr: {
      // Duality map g_i = sign(v_i) (|v_i| / |v|)^(r-1).
      const double r = s.r();
      ComponentFunctional g = ComponentFunctional::zero(d);
      for (std::size_t i = 0; i < d; ++i) g[i] = detail::sign(v[i]) * std::pow(std::abs(v[i]) / nv, r - 1.0);
      out.extreme.push_back(std::move(g));
      return out;
    }
    case Kind::l1: {
      // g_i = sign(v_i) where v_i != 0, free +-1 elsewhere. A coordinate is
      // treated as zero when flipping all such signs together costs at most
      // the relative tolerance.
      const double zero_cut = kGeomTol * nv / (2.0 * static_cast<double>(d));
      std::vector<std::size_t> free;
      ComponentFunctional base = ComponentFunctional::zero(d);
      for (std::size_t i = 0; i < d; ++i) {
        if (std::abs(v[i]) <= zero_cut) {
          free.push_back(i);
          base[i] = 1.0;
        } else {
          base[i] = detail::sign(v[i]);
        }
      }
      if (free.size() > 20) throw NotEnumerableError("too many free coordinates in l1 support set");
      for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
        ComponentFunctional g = base;
        for (std::size_t k = 0; k < free.size(); ++k)
          if ((mask >> k) & 1) g[free[k]] = -1.0;
        out.extreme.push_back(std::move(g));
      }
      break;
    }
    case Kind::linf: {
      const double cut = nv * (1.0 - kGeomTol);
      for (std::size_t i = 0; i < d; ++i) {
        if (std::abs(v[i]) >= cut) {
          ComponentFunctional g = ComponentFunctional::zero(d);
          g[i] = detail::sign(v[i]);
          out.extreme.push_back(std::move(g));
        }
      }
      break;
    }
    case Kind::polygon: {
      const double cut = nv * (1.0 - kGeomTol);
      for (const Point2& q : s.polar_vertices())
        if (q[0] * v[0] + q[1] * v[1] >= cut) out.extreme.push_back(ComponentFunctional{q[0], q[1]});
      break;
    }
  }
  std::sort(out.extreme.begin(), out.extreme.end());
  out.form = out.extreme.size() == 1 && s.smooth() ? JDescription::Form::singleton : JDescription::Form::polytope;
  return out;
}

inline bool is_smooth_point(const ComponentSpace& s, const ComponentVector& v) {
  return support_set(s, v).is_singleton();
}

// Definitional membership test: norm-one functional attaining norm(v) at v.
inline bool in_support_set(const ComponentSpace& s, const ComponentVector& v, const ComponentFunctional& g,
                           double tol = kGeomTol) {
  const double nv = norm(s, v);
  const double ng = dual_norm(s, g);
  const double gv = pair(g, v);
  return std::abs(ng - 1.0) <= tol && gv >= nv * (1.0 - tol) && gv <= nv * (1.0 + tol);
}

// {g(w) : g in J(v)} as [min, max] over the extreme functionals.
inline Interval value_interval(const ComponentSpace& s, const ComponentVector& v, const ComponentVector& w) {
  detail::check_dim(s, w.size());
  const JDescription j = support_set(s, v);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const ComponentFunctional& g : j.extreme) {
    const double x = pair(g, w);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return {lo, hi};
}

// Diameter of J(v) in the dual norm.
inline double d_component(const ComponentSpace& s, const ComponentVector& v) {
  const JDescription j = support_set(s, v);
  double diam = 0.0;
  for (std::size_t a = 0; a < j.extreme.size(); ++a)
    for (std::size_t b = a + 1; b < j.extreme.size(); ++b)
      diam = std::max(diam, dual_norm(s, j.extreme[a] - j.extreme[b]));
  return diam;
}

// Supremum of d_component over the non-zero vectors of s.
inline double cal_d_component(const ComponentSpace& s) {
  if (s.smooth()) return 0.0;
  switch (s.kind()) {
    case Kind::l1:
    case Kind::linf:
      // At a vertex of the primal ball, J is a facet of the dual cube /
      // cross-polytope containing two antipodal-coordinate vertices.
      return 2.0;
    case Kind::polygon: {
      // J at primal vertex v_i is the polar edge [g_{i-1}, g_i].
      const auto& g = s.polar_vertices();
      const std::size_t n = g.size();
      double best = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = g[(i + n - 1) % n];
        const Point2& b = g[i];
        best = std::max(best, dual_norm(s, ComponentFunctional{b[0] - a[0], b[1] - a[1]}));
      }
      return best;
    }
    default: return 0.0;
  }
}

// A unit vector v with f(v) = dual_norm(f).
inline ComponentVector norming_vector(const ComponentSpace& s, const ComponentFunctional& f) {
  detail::check_dim(s, f.size());
  if (f.is_zero()) throw DegenerateInputError("the zero functional has no norming vector");
  const std::size_t d = s.dim();
  ComponentVector v = ComponentVector::zero(d);
  switch (s.kind()) {
    case Kind::euclidean:
    case Kind::lr: {
      const double rd = detail::conjugate(s.r());
      const double nf = detail::lr_norm(f.coords, rd);
      for (std::size_t i = 0; i < d; ++i) v[i] = detail::sign(f[i]) * std::pow(std::abs(f[i]) / nf, rd - 1.0);
      break;
    }
    case Kind::l1: {
      std::size_t k = 0;
      for (std::size_t i = 1; i < d; ++i)
        if (std::abs(f[i]) > std::abs(f[k])) k = i;
      v[k] = f[k] >= 0.0 ? 1.0 : -1.0;
      break;
    }
    case Kind::linf:
      for (std::size_t i = 0; i < d; ++i) v[i] = f[i] >= 0.0 ? 1.0 : -1.0;
      break;
    case Kind::polygon: {
      const auto& vs = s.vertices();
      std::size_t k = 0;
      for (std::size_t i = 1; i < vs.size(); ++i)
        if (vs[i][0] * f[0] + vs[i][1] * f[1] > vs[k][0] * f[0] + vs[k][1] * f[1]) k = i;
      v = ComponentVector{vs[k][0], vs[k][1]};
      break;
    }
  }
  return v;
}

// One-parameter family of symmetric hexagons
//   H(t) = conv{ +-(1,0), +-(1,1), +-(-t,1) },  0 <= t < 1.
// H(0) is an affine image of the regular hexagon; H(t) tends to the square
// [-1,1]^2 as t -> 1. cal_d_component(H(t)) = 1 + t, attained at the vertex
// (1,1), so it increases continuously from 1 towards 2.
inline ComponentSpace hexagon_family_member(double t) {
  if (!(t >= 0.0 && t < 1.0)) throw ValidationError("hexagon family parameter must lie in [0, 1)");
  return ComponentSpace::polygon({{{1.0, 0.0}, {1.0, 1.0}, {-t, 1.0}, {-1.0, 0.0}, {-1.0, -1.0}, {t, -1.0}}});
}

struct PolygonFamilyConfig {
  double t_lo = 0.0;
  double t_hi = 1.0 - 1e-9;
  double target_tol = 1e-6;
  int max_iterations = 200;
};

// Polygon space X_n with cal_d_component(X_n) = 2 - 1/n, found by bisection
// on the hexagon family above.
inline ComponentSpace polygon_family(long long n, const PolygonFamilyConfig& cfg = {}) {
  if (n < 1) throw ValidationError("polygon_family needs n >= 1");
  const double target = 2.0 - 1.0 / static_cast<double>(n);
  double lo = cfg.t_lo;
  double hi = cfg.t_hi;
  const double d_lo = cal_d_component(hexagon_family_member(lo));
  const double d_hi = cal_d_component(hexagon_family_member(hi));
  if (target < d_lo - cfg.target_tol || target > d_hi + cfg.target_tol) {
    std::ostringstream os;
    os << "polygon_family: target " << target << " outside bracket [" << d_lo << ", " << d_hi << "]";
    throw ConstructionError(os.str());
  }
  if (std::abs(d_lo - target) <= 1e-15) return hexagon_family_member(lo);
  for (int it = 0; it < cfg.max_iterations && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (cal_d_component(hexagon_family_member(mid)) < target)
      lo = mid;
    else
      hi = mid;
  }
  const double t = std::abs(cal_d_component(hexagon_family_member(lo)) - target) <=
                           std::abs(cal_d_component(hexagon_family_member(hi)) - target)
                       ? lo
                       : hi;
  ComponentSpace out = hexagon_family_member(t);
  if (std::abs(cal_d_component(out) - target) > cfg.target_tol)
    throw ConstructionError("polygon_family: bisection did not reach the target");
  return out;
}

}  // namespace lpsum
