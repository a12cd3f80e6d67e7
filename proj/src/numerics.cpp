// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include "covwave/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "covwave/error.hpp"
#include "covwave/kernels.hpp"

namespace covwave {

Grid::Grid(double lower, double upper, std::size_t count)
    : lower_(lower), upper_(upper), count_(count), spacing_(0.0) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw InvalidInput("grid bounds must be finite");
  }
  if (!(lower < upper)) {
    throw InvalidInput("grid requires lower < upper, got [" + std::to_string(lower) + ", " +
                       std::to_string(upper) + "]");
  }
  if (count < 2) throw InvalidInput("grid requires count >= 2");
  spacing_ = (upper - lower) / static_cast<double>(count - 1);
  if (!(spacing_ > 0.0)) throw InvalidInput("grid spacing underflows");
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out(count_);
  for (std::size_t i = 0; i < count_; ++i) out[i] = node(i);
  return out;
}

Grid Grid::mapped(double scale, double shift) const {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidInput("grid map needs a positive finite scale");
  }
  return Grid(scale * lower_ + shift, scale * upper_ + shift, count_);
}

bool Grid::node_range(const Interval& iv, std::size_t& first, std::size_t& last) const {
  if (iv.empty()) return false;
  const double lo = std::ceil((iv.lower - lower_) / spacing_ - kEdgeTolerance);
  const double hi = std::floor((iv.upper - lower_) / spacing_ + kEdgeTolerance);
  const double top = static_cast<double>(count_ - 1);
  const double f = std::max(lo, 0.0);
  const double l = std::min(hi, top);
  if (f > l) return false;
  first = static_cast<std::size_t>(f);
  last = static_cast<std::size_t>(l);
  return true;
}

std::size_t first_non_finite(std::span<const Complex> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) return i;
  }
  return values.size();
}

namespace {

void validate(const Grid& grid, std::span<const Complex> values) {
  if (values.size() != grid.count()) {
    throw InvalidInput("grid function has " + std::to_string(values.size()) +
                       " values for a grid of " + std::to_string(grid.count()) + " nodes");
  }
  if (const auto bad = first_non_finite(values); bad != values.size()) {
    throw InvalidInput("grid function has a non-finite value at index " + std::to_string(bad));
  }
}

}  // namespace

GridFunction::GridFunction(Grid grid, std::vector<Complex> values)
    : GridFunction(grid, std::move(values), grid.domain()) {}

GridFunction::GridFunction(Grid grid, std::vector<Complex> values, Interval support)
    : grid_(grid), values_(std::move(values)), support_() {
  validate(grid_, values_);
  if (!std::isfinite(support.lower) || !std::isfinite(support.upper)) {
    throw InvalidInput("support bounds must be finite");
  }
  support_ = {std::max(support.lower, grid_.lower()), std::min(support.upper, grid_.upper())};
  if (support_.empty()) throw InvalidInput("support does not meet the grid domain");
}

GridFunction GridFunction::with_values(std::vector<Complex> values) const {
  return GridFunction(grid_, std::move(values), support_);
}

namespace {

// Trapezoid weights in units of the spacing; callers scale the sum once.
std::vector<double> unit_weights(const Grid& grid, const Interval& support) {
  std::vector<double> w(grid.count(), 0.0);
  std::size_t first = 0;
  std::size_t last = 0;
  if (!grid.node_range(support, first, last)) return w;

  const double h = grid.spacing();
  for (std::size_t i = first; i <= last; ++i) w[i] = 1.0;
  w[first] -= 0.5;
  w[last] -= 0.5;

  // Partial cells between a support edge and the nearest interior node.
  const double below = std::max(0.0, grid.node(first) - support.lower) / h;
  const double above = std::max(0.0, support.upper - grid.node(last)) / h;
  if (first == last) {
    w[first] += below + above;
    return w;
  }
  if (below > 0.0) {
    const double c = 0.5 * below * below;
    w[first] += below + c;
    w[first + 1] -= c;
  }
  if (above > 0.0) {
    const double c = 0.5 * above * above;
    w[last] += above + c;
    w[last - 1] -= c;
  }
  return w;
}

}  // namespace

std::vector<double> quadrature_weights(const Grid& grid, const Interval& support) {
  auto w = unit_weights(grid, support);
  for (auto& x : w) x *= grid.spacing();
  return w;
}

Complex integrate(const GridFunction& f) {
  const auto w = unit_weights(f.grid(), f.support());
  return f.grid().spacing() * kernels::weighted_sum(w, f.values());
}

double integrate_real(const GridFunction& layout, std::span<const double> values) {
  if (values.size() != layout.size()) {
    throw InvalidInput("integrand length does not match the grid");
  }
  const auto w = unit_weights(layout.grid(), layout.support());
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0.0) sum += w[i] * values[i];
  }
  return layout.grid().spacing() * sum;
}

GridFunction resample(const GridFunction& f, const Grid& target) {
  const Interval& src = f.support();
  const Interval overlap{std::max(src.lower, target.lower()), std::min(src.upper, target.upper())};
  if (overlap.empty()) throw InvalidInput("resample target does not overlap the source support");

  const Grid& g = f.grid();
  const double h = g.spacing();
  const double tol = kEdgeTolerance * h;
  std::vector<Complex> out(target.count());
  for (std::size_t m = 0; m < out.size(); ++m) {
    const double x = target.node(m);
    if (x < src.lower - tol || x > src.upper + tol) continue;
    const double t = std::clamp((x - g.lower()) / h, 0.0, static_cast<double>(g.count() - 1));
    const double nearest = std::round(t);
    if (std::abs(t - nearest) < kEdgeTolerance) {
      out[m] = f[static_cast<std::size_t>(nearest)];
      continue;
    }
    auto i = static_cast<std::size_t>(t);
    if (i + 1 >= g.count()) i = g.count() - 2;
    const double frac = t - static_cast<double>(i);
    out[m] = frac == 1.0 ? f[i + 1] : f[i] + frac * (f[i + 1] - f[i]);
  }
  return GridFunction(target, std::move(out), overlap);
}

}  // namespace covwave
