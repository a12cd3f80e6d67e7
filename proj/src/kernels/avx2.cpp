// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

// Compiled with -mavx2 -mfma; only called after a runtime CPU check.

#include <immintrin.h>

#include <cmath>
#include <vector>

#include "covwave/kernels.hpp"

namespace covwave::kernels::avx2 {
namespace {

// Lanes advance by a unit-modulus rotation; the phase is recomputed directly
// every kReseedSteps vector steps so rounding drift stays at a few ulps.
constexpr std::size_t kLanes = 4;
constexpr std::size_t kReseedSteps = 32;

inline double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

void fourier_sum(double k_start, double k_step, std::span<const Complex> coeffs,
                 std::span<const double> u, std::span<Complex> out) {
  const std::size_t n = coeffs.size();
  const std::size_t padded = (n + kLanes - 1) / kLanes * kLanes;
  std::vector<double> cre(padded, 0.0);
  std::vector<double> cim(padded, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    cre[j] = coeffs[j].real();
    cim[j] = coeffs[j].imag();
  }

  alignas(32) double seed_re[kLanes];
  alignas(32) double seed_im[kLanes];
  for (std::size_t m = 0; m < u.size(); ++m) {
    const double x = u[m];
    const double stride = static_cast<double>(kLanes) * k_step * x;
    const __m256d rot_re = _mm256_set1_pd(std::cos(stride));
    const __m256d rot_im = _mm256_set1_pd(std::sin(stride));
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    __m256d ph_re = _mm256_setzero_pd();
    __m256d ph_im = _mm256_setzero_pd();

    for (std::size_t j = 0, step = 0; j < padded; j += kLanes, ++step) {
      if (step % kReseedSteps == 0) {
        for (std::size_t l = 0; l < kLanes; ++l) {
          const double phase = (k_start + static_cast<double>(j + l) * k_step) * x;
          seed_re[l] = std::cos(phase);
          seed_im[l] = std::sin(phase);
        }
        ph_re = _mm256_load_pd(seed_re);
        ph_im = _mm256_load_pd(seed_im);
      }
      const __m256d c_re = _mm256_loadu_pd(cre.data() + j);
      const __m256d c_im = _mm256_loadu_pd(cim.data() + j);
      acc_re = _mm256_fmadd_pd(c_re, ph_re, acc_re);
      acc_re = _mm256_fnmadd_pd(c_im, ph_im, acc_re);
      acc_im = _mm256_fmadd_pd(c_re, ph_im, acc_im);
      acc_im = _mm256_fmadd_pd(c_im, ph_re, acc_im);

      const __m256d next_re = _mm256_fmsub_pd(ph_re, rot_re, _mm256_mul_pd(ph_im, rot_im));
      const __m256d next_im = _mm256_fmadd_pd(ph_re, rot_im, _mm256_mul_pd(ph_im, rot_re));
      ph_re = next_re;
      ph_im = next_im;
    }
    out[m] = {horizontal_sum(acc_re), horizontal_sum(acc_im)};
  }
}

Complex weighted_sum(std::span<const double> weights, std::span<const Complex> values) {
  const std::size_t n = weights.size();
  // std::complex<double> is layout-compatible with double[2].
  const double* v = reinterpret_cast<const double*>(values.data());
  const double* w = weights.data();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d wide = _mm256_castpd128_pd256(_mm_loadu_pd(w + i));
    const __m256d dup = _mm256_permute4x64_pd(wide, 0b01010000);  // w0 w0 w1 w1
    acc = _mm256_fmadd_pd(dup, _mm256_loadu_pd(v + 2 * i), acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double re = lanes[0] + lanes[2];
  double im = lanes[1] + lanes[3];
  for (; i < n; ++i) {
    re += w[i] * v[2 * i];
    im += w[i] * v[2 * i + 1];
  }
  return {re, im};
}

}  // namespace covwave::kernels::avx2
