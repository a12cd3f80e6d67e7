// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include "covwave/entropy.hpp"

#include <cmath>
#include <vector>

#include "covwave/error.hpp"
#include "covwave/io.hpp"

namespace covwave {

namespace {

std::vector<double> real_parts(const GridFunction& f) {
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].real();
  return out;
}

}  // namespace

ProbabilityDensity::ProbabilityDensity(GridFunction data) : data_(std::move(data)) {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i].imag() != 0.0) {
      throw InvalidInput("probability density is complex at index " + std::to_string(i));
    }
    if (data_[i].real() < 0.0) {
      throw InvalidInput("probability density is negative at index " + std::to_string(i));
    }
  }
  const double mass = integrate_real(data_, real_parts(data_));
  if (std::abs(mass - 1.0) > kNormalizationTolerance) {
    throw InvalidInput("probability density integrates to " + format_double(mass) + ", not 1");
  }
}

ProbabilityDensity ProbabilityDensity::normalized(const GridFunction& unnormalized) {
  auto values = real_parts(unnormalized);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0 || unnormalized[i].imag() != 0.0) {
      throw InvalidInput("density samples must be real and nonnegative (index " +
                         std::to_string(i) + ")");
    }
  }
  const double mass = integrate_real(unnormalized, values);
  if (!(mass > 0.0)) throw PreconditionError("density has zero mass and cannot be normalized");
  std::vector<Complex> scaled(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) scaled[i] = values[i] / mass;
  return ProbabilityDensity(unnormalized.with_values(std::move(scaled)));
}

std::string to_string(DensityMode mode) {
  return mode == DensityMode::intensity ? "intensity" : "photon";
}

DensityMode parse_density_mode(const std::string& text) {
  if (text == "intensity") return DensityMode::intensity;
  if (text == "photon") return DensityMode::photon;
  throw InvalidInput("density mode must be 'intensity' or 'photon', got '" + text + "'");
}

ProbabilityDensity density_from_spectral(const SpectralFunction& g, DensityMode mode) {
  if (!(norm_squared(g) > 0.0)) {
    throw PreconditionError("density undefined: spectral norm is zero");
  }
  if (mode == DensityMode::photon) {
    const PhotonAmplitude a = to_photon(g, mean_momentum(g));
    const GridFunction& f = a.data();
    std::vector<Complex> weight(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) weight[i] = std::norm(f[i]) / f.grid().node(i);
    return ProbabilityDensity::normalized(f.with_values(std::move(weight)));
  }
  const GridFunction& f = g.data();
  std::vector<Complex> intensity(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) intensity[i] = std::norm(f[i]);
  return ProbabilityDensity::normalized(f.with_values(std::move(intensity)));
}

double entropy(const ProbabilityDensity& rho) {
  const GridFunction& f = rho.data();
  std::vector<double> integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double r = f[i].real();
    if (r < 0.0) throw InvalidInput("entropy of a negative density value");
    integrand[i] = r > 0.0 ? -r * std::log(r) : 0.0;
  }
  return integrate_real(f, integrand);
}

ProbabilityDensity boost_density(const ProbabilityDensity& rho, const Boost& boost) {
  const double s = boost.factor();
  const double inv = std::exp(-boost.rapidity());
  const GridFunction& f = rho.data();
  std::vector<Complex> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values[i] = inv * f[i].real();
  return ProbabilityDensity(GridFunction(f.grid().mapped(s), std::move(values),
                                         {s * f.support().lower, s * f.support().upper}));
}

EntropyReport entropy_difference(const SpectralFunction& g_analytic, const Window& win,
                                 const Boost& boost, DensityMode mode) {
  const SpectralFunction boosted = boost_spectral(g_analytic, boost);
  const SpectralFunction windowed = apply_window(boosted, boost_window(win, boost));
  if (!(norm_squared(windowed) > 0.0)) {
    throw PreconditionError("window " + win.serialize() + " annihilates the spectrum");
  }
  EntropyReport report;
  report.rapidity = boost.rapidity();
  report.s_analytic = entropy(density_from_spectral(boosted, mode));
  report.s_windowed = entropy(density_from_spectral(windowed, mode));
  report.delta_s = report.s_analytic - report.s_windowed;
  return report;
}

}  // namespace covwave
