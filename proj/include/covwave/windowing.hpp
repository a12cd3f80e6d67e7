// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include <string>

#include "covwave/covariance.hpp"
#include "covwave/spectral.hpp"

namespace covwave {

/// Hard cut-off keeping [lower, lower + width].
///
/// A first-kind window is a fixed observer scope: boosts leave it alone and
/// only translated() moves it. A second-kind window rides along with the
/// squeeze, both edges scaling by e^eta, which keeps width / p invariant.
class Window {
 public:
  /// Throws InvalidInput unless width > 0 and both values are finite.
  Window(double lower, double width, Kind kind);

  double lower() const { return lower_; }
  double width() const { return width_; }
  double upper() const { return lower_ + width_; }
  Interval interval() const { return {lower_, upper()}; }
  Kind kind() const { return kind_; }

  Window translated(double b) const { return Window(lower_ + b, width_, kind_); }

  /// "kind,a,w" with round-trip precision.
  std::string serialize() const;
  static Window parse(const std::string& text);

 private:
  double lower_;
  double width_;
  Kind kind_;
};

/// Zeroes g outside the window (edge nodes kept) and narrows the support to
/// the intersection. The grid is unchanged. Throws PreconditionError if no
/// node of g's support lies in the window.
SpectralFunction apply_window(const SpectralFunction& g, const Window& win);

Window boost_window(const Window& win, const Boost& boost);

/// w / p. Throws InvalidInput unless p > 0.
double invariant_ratio(const Window& win, double p);

}  // namespace covwave
