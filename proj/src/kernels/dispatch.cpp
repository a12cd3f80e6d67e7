// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include <atomic>
#include <cstdlib>
#include <string>

#include "covwave/error.hpp"
#include "covwave/kernels.hpp"

namespace covwave::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(COVWAVE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("COVWAVE_KERNEL"); env && std::string(env) == "scalar") {
    return Backend::scalar;
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw InvalidInput("kernel backend '" + std::string(backend_name(b)) +
                       "' is not available on this machine");
  }
  current().store(b, std::memory_order_relaxed);
}

void fourier_sum(double k_start, double k_step, std::span<const Complex> coeffs,
                 std::span<const double> u, std::span<Complex> out) {
#if defined(COVWAVE_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::fourier_sum(k_start, k_step, coeffs, u, out);
#endif
  scalar::fourier_sum(k_start, k_step, coeffs, u, out);
}

Complex weighted_sum(std::span<const double> weights, std::span<const Complex> values) {
#if defined(COVWAVE_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::weighted_sum(weights, values);
#endif
  return scalar::weighted_sum(weights, values);
}

}  // namespace covwave::kernels
