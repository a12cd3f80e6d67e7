// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include "covwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "covwave/error.hpp"
#include "covwave/kernels.hpp"

namespace covwave {

SpectralFunction::SpectralFunction(GridFunction data, double reference_scale)
    : data_(std::move(data)), reference_scale_(reference_scale) {
  if (!(reference_scale > 0.0) || !std::isfinite(reference_scale)) {
    throw InvalidInput("reference scale sigma must be positive and finite");
  }
}

WaveletSignal::WaveletSignal(GridFunction data, double mean_momentum)
    : data_(std::move(data)), mean_momentum_(mean_momentum) {
  if (!(mean_momentum > 0.0) || !std::isfinite(mean_momentum)) {
    throw InvalidInput("wavelet signal needs a positive mean momentum");
  }
}

namespace {

void require_positive_grid(const Grid& grid, const char* family) {
  if (!(grid.lower() > 0.0)) {
    throw InvalidInput(std::string(family) + " spectrum needs a k-grid with positive lower bound, got " +
                       std::to_string(grid.lower()));
  }
}

GridFunction build(const GaussianShape& s, const std::optional<Grid>& grid) {
  if (!(s.width > 0.0) || !std::isfinite(s.width) || !std::isfinite(s.center)) {
    throw InvalidInput("gaussian width must be positive");
  }
  const Grid g = grid ? *grid : default_grid(s);
  require_positive_grid(g, "gaussian");
  const double two_var = 2.0 * s.width * s.width;
  return GridFunction::sample(g, [&](double k) {
    const double d = k - s.center;
    return std::exp(-d * d / two_var);
  });
}

GridFunction build(const FlatShape& s, const std::optional<Grid>& grid) {
  if (!(s.lower > 0.0) || !(s.lower < s.upper) || !std::isfinite(s.upper)) {
    throw InvalidInput("flat support must satisfy 0 < lower < upper");
  }
  const Grid g = grid ? *grid : default_grid(s);
  require_positive_grid(g, "flat");
  std::vector<Complex> values(g.count());
  std::size_t first = 0;
  std::size_t last = 0;
  const Interval support{s.lower, s.upper};
  if (!g.node_range(support, first, last)) {
    throw InvalidInput("flat support contains no grid node");
  }
  std::fill(values.begin() + first, values.begin() + last + 1, Complex(1.0));
  return GridFunction(g, std::move(values), support);
}

GridFunction build(const SampledShape& s, const std::optional<Grid>& grid) {
  GridFunction f(s.grid, s.values);
  if (grid && !(*grid == s.grid)) return resample(f, *grid);
  return f;
}

}  // namespace

Grid default_grid(const SpectralShape& shape, std::size_t count) {
  return std::visit(
      [count](const auto& s) -> Grid {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianShape>) {
          return Grid(s.center - 8.0 * s.width, s.center + 8.0 * s.width, count);
        } else if constexpr (std::is_same_v<T, FlatShape>) {
          return Grid(s.lower, s.upper, count);
        } else {
          return s.grid;
        }
      },
      shape);
}

SpectralFunction construct_spectral(const SpectralShape& shape, const std::optional<Grid>& grid) {
  GridFunction data = std::visit([&](const auto& s) { return build(s, grid); }, shape);

  double sigma = 1.0;
  const double norm = norm_squared(data);
  if (norm > 0.0) {
    std::vector<double> k_weighted(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
      k_weighted[i] = data.grid().node(i) * std::norm(data[i]);
    }
    const double p = integrate_real(data, k_weighted) / norm;
    if (p > 0.0 && std::isfinite(p)) sigma = p;
  }
  return SpectralFunction(std::move(data), sigma);
}

double norm_squared(const GridFunction& f) {
  std::vector<double> intensity(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) intensity[i] = std::norm(f[i]);
  return integrate_real(f, intensity);
}

double norm_squared(const SpectralFunction& g) { return norm_squared(g.data()); }

double mean_momentum(const SpectralFunction& g) {
  const GridFunction& f = g.data();
  const double norm = norm_squared(f);
  if (!(norm > 0.0)) throw PreconditionError("mean momentum undefined: spectral norm is zero");
  std::vector<double> k_weighted(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) k_weighted[i] = f.grid().node(i) * std::norm(f[i]);
  return integrate_real(f, k_weighted) / norm;
}

namespace detail {

std::vector<Complex> fourier_integral(const GridFunction& layout,
                                      std::span<const Complex> integrand_coeffs,
                                      const Grid& u_grid) {
  const Grid& k = layout.grid();
  const auto w = quadrature_weights(k, layout.support());
  const auto nz_first = std::find_if(w.begin(), w.end(), [](double x) { return x != 0.0; });
  std::vector<Complex> out(u_grid.count());
  if (nz_first == w.end()) return out;
  const auto first = static_cast<std::size_t>(nz_first - w.begin());
  std::size_t last = w.size() - 1;
  while (w[last] == 0.0) --last;

  std::vector<Complex> coeffs(last - first + 1);
  for (std::size_t j = first; j <= last; ++j) coeffs[j - first] = w[j] * integrand_coeffs[j];
  const auto u = u_grid.nodes();
  kernels::fourier_sum(k.node(first), k.spacing(), coeffs, u, out);
  return out;
}

}  // namespace detail

namespace {

WaveletSignal synthesize_scaled(const SpectralFunction& g, const Grid& u_grid, double prefactor,
                                double p) {
  auto out = detail::fourier_integral(g.data(), g.data().values(), u_grid);
  for (auto& v : out) v *= prefactor;
  return WaveletSignal(GridFunction(u_grid, std::move(out)), p);
}

}  // namespace

WaveletSignal synthesize(const SpectralFunction& g, const Grid& u_grid, SynthesisMode mode) {
  if (!(norm_squared(g) > 0.0)) throw PreconditionError("cannot synthesize a zero-norm spectrum");
  if (mode == SynthesisMode::classical) {
    return synthesize_scaled(g, u_grid, 1.0 / std::sqrt(2.0 * std::numbers::pi), 1.0);
  }
  const double p = mean_momentum(g);
  if (!(p > 0.0)) throw PreconditionError("wavelet synthesis needs a positive mean momentum");
  return synthesize_with_momentum(g, u_grid, p);
}

WaveletSignal synthesize_with_momentum(const SpectralFunction& g, const Grid& u_grid, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw PreconditionError("wavelet synthesis needs a positive mean momentum");
  }
  return synthesize_scaled(g, u_grid, 1.0 / std::sqrt(2.0 * std::numbers::pi * p), p);
}

double edge_leakage(const WaveletSignal& signal) {
  const auto v = signal.data().values();
  double peak = 0.0;
  for (const auto& x : v) peak = std::max(peak, std::abs(x));
  if (peak == 0.0) return 0.0;
  return std::max(std::abs(v.front()), std::abs(v.back())) / peak;
}

double signal_norm_squared(const WaveletSignal& signal) { return norm_squared(signal.data()); }

}  // namespace covwave
