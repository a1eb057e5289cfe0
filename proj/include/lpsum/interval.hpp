#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>

#include "lpsum/errors.hpp"

namespace lpsum {

// Closed real interval [lo, hi]. Used for the achievable-value sets
// {f(w) : f in J(v)}, which are compact and convex subsets of the reals.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double l, double h) : lo(l), hi(h) {
    if (!(lo <= hi)) throw ValidationError("interval with lo > hi");
  }

  static Interval point(double v) { return {v, v}; }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool degenerate() const { return lo == hi; }

  bool contains(double v, double slack = 0.0) const { return lo - slack <= v && v <= hi + slack; }
  bool contains(const Interval& o, double slack = 0.0) const {
    return lo - slack <= o.lo && o.hi <= hi + slack;
  }

  // Distance from v to the interval (0 inside).
  double distance(double v) const {
    if (v < lo) return lo - v;
    if (v > hi) return v - hi;
    return 0.0;
  }

  // min{|t| : t in [lo, hi]}
  double min_abs() const { return distance(0.0); }

  Interval& operator+=(const Interval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }

  friend Interval operator*(double s, const Interval& a) {
    return s >= 0.0 ? Interval{s * a.lo, s * a.hi} : Interval{s * a.hi, s * a.lo};
  }
  friend Interval operator+(const Interval& a, double s) { return {a.lo + s, a.hi + s}; }

  // Convex hull of the union.
  static Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& a) {
    return os << '[' << a.lo << ", " << a.hi << ']';
  }
};

}  // namespace lpsum
