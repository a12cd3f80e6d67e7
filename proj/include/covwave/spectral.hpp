// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "covwave/numerics.hpp"

namespace covwave {

/// exp(-(k - center)^2 / (2 width^2)).
struct GaussianShape {
  double center = 0.0;
  double width = 0.0;
};

/// 1 on [lower, upper], 0 elsewhere; a hard-edged spectrum.
struct FlatShape {
  double lower = 0.0;
  double upper = 0.0;
};

/// Explicit samples on a uniform grid.
struct SampledShape {
  Grid grid;
  std::vector<Complex> values;
};

using SpectralShape = std::variant<GaussianShape, FlatShape, SampledShape>;

inline constexpr std::size_t kDefaultGridCount = 4096;

/// Spectral function g(k) on a momentum grid, with the reference energy scale
/// sigma that enters the multiplier pair of covariance::multiplier_pair.
class SpectralFunction {
 public:
  /// Throws InvalidInput unless reference_scale > 0 and finite.
  SpectralFunction(GridFunction data, double reference_scale);

  const GridFunction& data() const { return data_; }
  const Grid& grid() const { return data_.grid(); }
  double reference_scale() const { return reference_scale_; }

 private:
  GridFunction data_;
  double reference_scale_;
};

/// A signal on a u-grid (u = z - t) with the mean momentum it was built from.
/// Classical-mode synthesis stores the sentinel p = 1.
class WaveletSignal {
 public:
  WaveletSignal(GridFunction data, double mean_momentum);

  const GridFunction& data() const { return data_; }
  const Grid& grid() const { return data_.grid(); }
  double mean_momentum() const { return mean_momentum_; }

 private:
  GridFunction data_;
  double mean_momentum_;
};

enum class SynthesisMode { wavelet, classical };

/// Default grid for a shape: center +- 8 widths for a Gaussian, the support
/// for a flat spectrum, the sample grid for explicit samples.
Grid default_grid(const SpectralShape& shape, std::size_t count = kDefaultGridCount);

/// Builds g(k) for `shape` on `grid` (default_grid when absent). The
/// reference scale is the rest-frame mean momentum, or 1 when the function
/// has no positive mean momentum (e.g. the zero function).
///
/// Gaussian and flat shapes require a positive width or ordered support with
/// 0 < lower, and a grid whose lower bound is positive.
SpectralFunction construct_spectral(const SpectralShape& shape,
                                    const std::optional<Grid>& grid = std::nullopt);

/// Integral of |f|^2.
double norm_squared(const GridFunction& f);
double norm_squared(const SpectralFunction& g);

/// p = int k |g|^2 dk / int |g|^2 dk. Throws PreconditionError on zero norm.
double mean_momentum(const SpectralFunction& g);

/// Fourier synthesis at every node of `u_grid`:
///   wavelet:   G(u) = (2 pi p)^(-1/2) int g(k) e^{iku} dk, p = mean_momentum(g)
///   classical: F(u) = (2 pi)^(-1/2)   int g(k) e^{iku} dk
WaveletSignal synthesize(const SpectralFunction& g, const Grid& u_grid,
                         SynthesisMode mode = SynthesisMode::wavelet);

/// Wavelet-mode synthesis with the prefactor's p supplied by the caller.
/// Linear in g for fixed p.
WaveletSignal synthesize_with_momentum(const SpectralFunction& g, const Grid& u_grid, double p);

/// max(|first|, |last|) / max |value|; zero for the zero signal.
double edge_leakage(const WaveletSignal& signal);

/// Integral of |signal|^2 du.
double signal_norm_squared(const WaveletSignal& signal);

namespace detail {
/// sum_j w_j c_j e^{i k_j u} over the nonzero-weight nodes of `layout`;
/// shared by the wavelet and photon-field syntheses.
std::vector<Complex> fourier_integral(const GridFunction& layout,
                                      std::span<const Complex> integrand_coeffs,
                                      const Grid& u_grid);
}  // namespace detail

}  // namespace covwave
