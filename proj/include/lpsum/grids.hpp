#pragma once

// Seedless deterministic point sets. Every sampled quantity in the library
// is reproducible bit for bit.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace lpsum::grids {

// Fractional parts of sqrt of the first primes: a Kronecker sequence with
// good equidistribution in up to 16 dimensions.
inline double kronecker(std::size_t k, std::size_t axis) {
  static constexpr std::array<double, 16> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  const double alpha = std::sqrt(primes[axis % primes.size()]);
  const double x = static_cast<double>(k + 1) * alpha;
  return x - std::floor(x);
}

// `count` unit (Euclidean) directions in R^d. d = 1 gives {+1, -1}; d = 2
// gives equally spaced angles offset by half a step; higher dimensions use
// Kronecker points of the cube [-1, 1]^d projected to the sphere.
inline std::vector<std::vector<double>> directions(std::size_t d, std::size_t count) {
  std::vector<std::vector<double>> out;
  if (d == 1) {
    out.push_back({1.0});
    out.push_back({-1.0});
    return out;
  }
  out.reserve(count);
  if (d == 2) {
    for (std::size_t k = 0; k < count; ++k) {
      const double a = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(count);
      out.push_back({std::cos(a), std::sin(a)});
    }
    return out;
  }
  for (std::size_t k = 0; out.size() < count; ++k) {
    std::vector<double> v(d);
    double n2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = 2.0 * kronecker(k, i) - 1.0;
      n2 += v[i] * v[i];
    }
    if (n2 < 1e-4) continue;
    for (double& c : v) c /= std::sqrt(n2);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lpsum::grids
