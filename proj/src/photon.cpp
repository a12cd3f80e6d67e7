// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include "covwave/photon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "covwave/error.hpp"
#include "covwave/io.hpp"

namespace covwave {

namespace {

void require_positive_momentum(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw PreconditionError("photon map needs mean momentum p > 0");
  }
}

}  // namespace

PhotonAmplitude::PhotonAmplitude(GridFunction data, double mean_momentum)
    : data_(std::move(data)), mean_momentum_(mean_momentum) {
  if (!(data_.grid().lower() > 0.0)) {
    throw PreconditionError("photon amplitude needs k > 0 on its whole grid, lower bound is " +
                            format_double(data_.grid().lower()));
  }
  require_positive_momentum(mean_momentum);
}

PhotonAmplitude to_photon(const SpectralFunction& g, double p) {
  require_positive_momentum(p);
  const GridFunction& f = g.data();
  const Grid& grid = f.grid();

  std::size_t start = 0;
  while (start < grid.count() && !(grid.node(start) > 0.0)) {
    if (f[start] != Complex(0.0)) {
      throw PreconditionError("spectrum is nonzero at k = " + format_double(grid.node(start)) +
                              " <= 0; photon map needs support in k > 0");
    }
    ++start;
  }
  if (start + 2 > grid.count()) throw PreconditionError("spectrum has fewer than two nodes with k > 0");

  const Grid positive =
      start == 0 ? grid : Grid(grid.node(start), grid.upper(), grid.count() - start);
  std::vector<Complex> values(positive.count());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::sqrt(positive.node(i) / p) * f[start + i];
  }
  const Interval support{std::max(f.support().lower, positive.lower()), f.support().upper};
  return PhotonAmplitude(GridFunction(positive, std::move(values), support), p);
}

SpectralFunction to_spectral(const PhotonAmplitude& a, double p) {
  require_positive_momentum(p);
  const GridFunction& f = a.data();
  std::vector<Complex> values(f.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::sqrt(p / f.grid().node(i)) * f[i];
  }
  return SpectralFunction(f.with_values(std::move(values)), p);
}

double invariant_norm(const PhotonAmplitude& a) {
  const GridFunction& f = a.data();
  std::vector<double> density(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    density[i] = std::norm(f[i]) / (2.0 * std::numbers::pi * f.grid().node(i));
  }
  return integrate_real(f, density);
}

WaveletSignal synthesize_photon_field(const PhotonAmplitude& a, const Grid& u_grid) {
  const GridFunction& f = a.data();
  std::vector<Complex> integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    integrand[i] = f[i] / std::sqrt(2.0 * std::numbers::pi * f.grid().node(i));
  }
  auto out = detail::fourier_integral(f, integrand, u_grid);
  return WaveletSignal(GridFunction(u_grid, std::move(out)), a.mean_momentum());
}

PhotonAmplitude boost_photon(const PhotonAmplitude& a, double rapidity) {
  if (!std::isfinite(rapidity)) throw InvalidInput("rapidity must be finite");
  const double s = std::exp(rapidity);
  const GridFunction& f = a.data();
  GridFunction boosted(f.grid().mapped(s), std::vector<Complex>(f.values().begin(), f.values().end()),
                       {s * f.support().lower, s * f.support().upper});
  return PhotonAmplitude(std::move(boosted), s * a.mean_momentum());
}

}  // namespace covwave
