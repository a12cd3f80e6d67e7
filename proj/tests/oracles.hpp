// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

// Test-only reference computations. Nothing here calls into the library, so
// these values stay independent of the code paths they check.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>

namespace covwave::oracle {

/// Composite Simpson rule with `intervals` (even) subintervals.
template <typename F>
auto simpson(F&& f, double a, double b, std::size_t intervals) {
  if (intervals % 2) ++intervals;
  const double h = (b - a) / static_cast<double>(intervals);
  auto sum = f(a) + f(b);
  for (std::size_t i = 1; i < intervals; ++i) {
    const double x = a + static_cast<double>(i) * h;
    sum += (i % 2 ? 4.0 : 2.0) * f(x);
  }
  return sum * (h / 3.0);
}

/// int exp(-(k - k0)^2 / (2 s^2)) e^{iku} dk over the real line.
inline std::complex<double> gaussian_fourier(double k0, double s, double u) {
  return s * std::sqrt(2.0 * std::numbers::pi) * std::exp(std::complex<double>(0.0, k0 * u)) *
         std::exp(-0.5 * s * s * u * u);
}

/// Entropy (nats) of a normal density with standard deviation sd.
inline double normal_entropy(double sd) {
  return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * sd * sd);
}

/// Entropy difference between the |g|^2 density of gaussian(k0, s) on
/// [lo, hi] and the same density cut to [a, b] and renormalized, by Simpson
/// quadrature with `intervals` subintervals on each domain.
inline double gaussian_window_delta_s(double k0, double s, double lo, double hi, double a, double b,
                                      std::size_t intervals) {
  auto intensity = [&](double k) { return std::exp(-(k - k0) * (k - k0) / (s * s)); };
  auto entropy_on = [&](double from, double to) {
    const double mass = simpson(intensity, from, to, intervals);
    return simpson(
        [&](double k) {
          const double r = intensity(k) / mass;
          return r > 0.0 ? -r * std::log(r) : 0.0;
        },
        from, to, intervals);
  };
  return entropy_on(lo, hi) - entropy_on(a, b);
}

/// ΔS for gaussian(k0 = 5, s = 0.5) on [0.1, 20] cut to [4.5, 5.5], frozen
/// from gaussian_window_delta_s with 2e5 and 4e5 subintervals (agreeing to
/// 5e-16).
inline constexpr double kDeltaS0 = 0.4174392134373565;

/// Deterministic generator for hand-rolled property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  bool coin() { return index(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace covwave::oracle
