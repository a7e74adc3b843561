#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "monodir/grid.hpp"

namespace monodir::testing {

inline RealGrid white_noise(std::size_t n, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, scale);
  std::vector<double> v(n * n);
  for (auto& x : v) x = g(rng);
  return RealGrid(n, std::move(v));
}

/// cos(2 pi (l / n) x1 + phase), rows identical.
inline RealGrid axis_wave(std::size_t n, int l, double phase = 0.0, double amplitude = 1.0) {
  std::vector<double> v(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      v[r * n + c] = amplitude * std::cos(2.0 * std::numbers::pi * l * static_cast<double>(c) / static_cast<double>(n) + phase);
    }
  }
  return RealGrid(n, std::move(v));
}

inline RealGrid constant(std::size_t n, double value) { return RealGrid(n, std::vector<double>(n * n, value)); }

inline double max_abs_diff(const RealGrid& a, const RealGrid& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

inline double deg(double rad) { return rad * 180.0 / std::numbers::pi; }
inline double rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace monodir::testing
