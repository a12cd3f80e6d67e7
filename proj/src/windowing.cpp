// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include "covwave/windowing.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "covwave/error.hpp"
#include "covwave/io.hpp"

namespace covwave {

Window::Window(double lower, double width, Kind kind) : lower_(lower), width_(width), kind_(kind) {
  if (!std::isfinite(lower) || !std::isfinite(width)) {
    throw InvalidInput("window parameters must be finite");
  }
  if (!(width > 0.0)) throw InvalidInput("window width w must be positive");
}

std::string Window::serialize() const {
  return to_string(kind_) + "," + format_double(lower_) + "," + format_double(width_);
}

Window Window::parse(const std::string& text) {
  const auto fields = split(text, ',');
  if (fields.size() != 3) throw InvalidInput("window must be 'kind,a,w', got '" + text + "'");
  return Window(parse_double(fields[1]), parse_double(fields[2]), parse_kind(fields[0]));
}

SpectralFunction apply_window(const SpectralFunction& g, const Window& win) {
  const GridFunction& f = g.data();
  const Interval support{std::max(f.support().lower, win.lower()),
                         std::min(f.support().upper, win.upper())};
  std::size_t first = 0;
  std::size_t last = 0;
  if (!f.grid().node_range(support, first, last)) {
    throw PreconditionError("window [" + format_double(win.lower()) + ", " +
                            format_double(win.upper()) + "] sees no data of the spectrum");
  }
  std::vector<Complex> values(f.size());
  std::copy(f.values().begin() + first, f.values().begin() + last + 1, values.begin() + first);
  return SpectralFunction(GridFunction(f.grid(), std::move(values), support), g.reference_scale());
}

Window boost_window(const Window& win, const Boost& boost) {
  if (win.kind() == Kind::first) return win;
  const double s = boost.factor();
  return Window(s * win.lower(), s * win.width(), Kind::second);
}

double invariant_ratio(const Window& win, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidInput("invariant ratio needs p > 0");
  return win.width() / p;
}

}  // namespace covwave
