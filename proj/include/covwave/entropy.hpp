// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include <string>

#include "covwave/covariance.hpp"
#include "covwave/numerics.hpp"
#include "covwave/photon.hpp"
#include "covwave/spectral.hpp"
#include "covwave/windowing.hpp"

namespace covwave {

/// Tolerance on the unit mass of a ProbabilityDensity.
inline constexpr double kNormalizationTolerance = 1e-8;

/// Real, nonnegative density on a k-grid integrating to one (real values are
/// stored with zero imaginary part).
class ProbabilityDensity {
 public:
  /// Validates without rescaling: throws InvalidInput on a negative, complex
  /// or non-normalized sample.
  explicit ProbabilityDensity(GridFunction data);

  /// Rescales nonnegative real samples to unit discrete mass. Throws
  /// PreconditionError when the mass is zero.
  static ProbabilityDensity normalized(const GridFunction& unnormalized);

  const GridFunction& data() const { return data_; }
  const Grid& grid() const { return data_.grid(); }
  double operator[](std::size_t i) const { return data_[i].real(); }

 private:
  GridFunction data_;
};

enum class DensityMode {
  intensity,  ///< rho proportional to |g|^2 (default)
  photon,     ///< rho proportional to |a|^2 / k with a = to_photon(g, p)
};

std::string to_string(DensityMode mode);
DensityMode parse_density_mode(const std::string& text);

/// rho(k) = |g(k)|^2 / int |g|^2. Throws PreconditionError on zero norm.
ProbabilityDensity density_from_spectral(const SpectralFunction& g,
                                         DensityMode mode = DensityMode::intensity);

/// Differential entropy -int rho ln rho dk in nats, 0 ln 0 = 0.
double entropy(const ProbabilityDensity& rho);

/// rho'(k) = e^{-eta} rho(e^{-eta} k) on the squeezed grid.
ProbabilityDensity boost_density(const ProbabilityDensity& rho, const Boost& boost);

struct EntropyReport {
  double s_analytic = 0.0;
  double s_windowed = 0.0;
  double delta_s = 0.0;
  double rapidity = 0.0;
};

/// Boosts g and the window, then returns the entropies of the analytic and
/// windowed densities and their difference. Throws PreconditionError when the
/// window annihilates the spectrum.
EntropyReport entropy_difference(const SpectralFunction& g_analytic, const Window& win,
                                 const Boost& boost, DensityMode mode = DensityMode::intensity);

}  // namespace covwave
