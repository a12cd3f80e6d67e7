// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include <cmath>

#include "covwave/kernels.hpp"

namespace covwave::kernels::scalar {

void fourier_sum(double k_start, double k_step, std::span<const Complex> coeffs,
                 std::span<const double> u, std::span<Complex> out) {
  for (std::size_t m = 0; m < u.size(); ++m) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      const double phase = (k_start + static_cast<double>(j) * k_step) * u[m];
      const double c = std::cos(phase);
      const double s = std::sin(phase);
      re += coeffs[j].real() * c - coeffs[j].imag() * s;
      im += coeffs[j].real() * s + coeffs[j].imag() * c;
    }
    out[m] = {re, im};
  }
}

Complex weighted_sum(std::span<const double> weights, std::span<const Complex> values) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    re += weights[i] * values[i].real();
    im += weights[i] * values[i].imag();
  }
  return {re, im};
}

}  // namespace covwave::kernels::scalar
