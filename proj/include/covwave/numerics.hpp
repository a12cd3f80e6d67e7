// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace covwave {

using Complex = std::complex<double>;

/// Closed interval [lower, upper] on an axis.
struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  double length() const { return upper - lower; }
  bool empty() const { return !(lower <= upper); }
};

/// Nodes closer than this fraction of the grid spacing to an interval edge
/// count as lying on the edge.
inline constexpr double kEdgeTolerance = 1e-9;

/// Uniform grid including both endpoints.
class Grid {
 public:
  /// Throws InvalidInput unless lower < upper, both finite, count >= 2.
  Grid(double lower, double upper, std::size_t count);

  double lower() const { return lower_; }
  double upper() const { return upper_; }
  std::size_t count() const { return count_; }
  double spacing() const { return spacing_; }
  Interval domain() const { return {lower_, upper_}; }

  /// The last node is pinned to `upper` exactly.
  double node(std::size_t i) const {
    return i + 1 == count_ ? upper_ : lower_ + static_cast<double>(i) * spacing_;
  }
  std::vector<double> nodes() const;

  /// Image of the grid under x -> scale * x + shift (scale > 0).
  Grid mapped(double scale, double shift = 0.0) const;

  /// Index range [first, last] of nodes inside `iv`, edge nodes included
  /// within kEdgeTolerance. Returns false when no node lies inside.
  bool node_range(const Interval& iv, std::size_t& first, std::size_t& last) const;

  bool operator==(const Grid&) const = default;

 private:
  double lower_;
  double upper_;
  std::size_t count_;
  double spacing_;
};

/// Complex samples on a grid, plus the interval on which the sampled function
/// is supported. Nodes outside the support carry no weight in quadrature and
/// are zero for every function this library produces. A hard edge that falls
/// between nodes is integrated exactly up to the edge (see quadrature_weights).
class GridFunction {
 public:
  /// Support defaults to the whole grid domain.
  GridFunction(Grid grid, std::vector<Complex> values);
  /// `support` is clipped to the grid domain and must stay non-empty.
  GridFunction(Grid grid, std::vector<Complex> values, Interval support);

  template <typename F>
  static GridFunction sample(const Grid& grid, F&& f) {
    std::vector<Complex> values(grid.count());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = Complex(f(grid.node(i)));
    return GridFunction(grid, std::move(values));
  }

  const Grid& grid() const { return grid_; }
  std::span<const Complex> values() const { return values_; }
  const Interval& support() const { return support_; }
  std::size_t size() const { return values_.size(); }
  Complex operator[](std::size_t i) const { return values_[i]; }

  /// Same support and grid, new values (validated).
  GridFunction with_values(std::vector<Complex> values) const;

 private:
  Grid grid_;
  std::vector<Complex> values_;
  Interval support_;
};

/// Quadrature weights for integrating over `support` on `grid`.
///
/// With the support equal to the grid domain these are the composite
/// trapezoid weights. When a support edge falls strictly between two nodes,
/// the partial cell up to the edge is added using linear extrapolation from
/// the two nodes nearest the edge; this keeps the rule second order for
/// integrands that are smooth inside a hard cut-off. Nodes outside the
/// support get weight zero.
std::vector<double> quadrature_weights(const Grid& grid, const Interval& support);

/// Integral of f over its support.
Complex integrate(const GridFunction& f);

/// Integral of the real samples `values` against the quadrature weights of f's
/// grid and support.
double integrate_real(const GridFunction& layout, std::span<const double> values);

/// Linear interpolation of f onto `target`. Target nodes outside f's support
/// map to zero. Throws InvalidInput if the target domain misses the support.
GridFunction resample(const GridFunction& f, const Grid& target);

/// Index of the first non-finite entry, or values.size() if all are finite.
std::size_t first_non_finite(std::span<const Complex> values);

}  // namespace covwave
