// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include <span>
#include <string_view>

#include "covwave/numerics.hpp"

// Data-parallel inner loops. Each kernel has a scalar reference implementation
// and, where the build and the CPU allow it, an AVX2/FMA variant. The active
// backend is chosen once at startup (best available, or COVWAVE_KERNEL=scalar)
// and can be switched at runtime for equivalence testing.
namespace covwave::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
/// Throws InvalidInput if `b` is not available on this machine.
void set_backend(Backend b);

/// out[m] = sum_j coeffs[j] * exp(i * (k_start + j * k_step) * u[m]).
void fourier_sum(double k_start, double k_step, std::span<const Complex> coeffs,
                 std::span<const double> u, std::span<Complex> out);

/// sum_i weights[i] * values[i].
Complex weighted_sum(std::span<const double> weights, std::span<const Complex> values);

namespace scalar {
void fourier_sum(double k_start, double k_step, std::span<const Complex> coeffs,
                 std::span<const double> u, std::span<Complex> out);
Complex weighted_sum(std::span<const double> weights, std::span<const Complex> values);
}  // namespace scalar

#if defined(COVWAVE_HAVE_AVX2)
namespace avx2 {
void fourier_sum(double k_start, double k_step, std::span<const Complex> coeffs,
                 std::span<const double> u, std::span<Complex> out);
Complex weighted_sum(std::span<const double> weights, std::span<const Complex> values);
}  // namespace avx2
#endif

}  // namespace covwave::kernels
