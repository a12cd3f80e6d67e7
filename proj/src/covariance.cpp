// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include "covwave/covariance.hpp"

#include <cmath>
#include <vector>

#include "covwave/error.hpp"
#include "covwave/io.hpp"

namespace covwave {

Boost::Boost(double rapidity) : rapidity_(rapidity) {
  if (!std::isfinite(rapidity)) throw InvalidInput("rapidity must be finite");
}

double Boost::factor() const { return std::exp(rapidity_); }

std::string to_string(Kind kind) { return kind == Kind::first ? "first" : "second"; }

Kind parse_kind(const std::string& text) {
  if (text == "first") return Kind::first;
  if (text == "second") return Kind::second;
  throw InvalidInput("kind must be 'first' or 'second', got '" + text + "'");
}

AffineMatrix AffineMatrix::operator*(const AffineMatrix& rhs) const {
  AffineMatrix out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out.m[r][c] = m[r][0] * rhs.m[0][c] + m[r][1] * rhs.m[1][c];
  }
  return out;
}

AffineMap::AffineMap(double rapidity, double shift, Kind kind)
    : rapidity_(rapidity), shift_(shift), kind_(kind) {
  if (!std::isfinite(rapidity) || !std::isfinite(shift)) {
    throw InvalidInput("affine map parameters must be finite");
  }
}

AffineMatrix AffineMap::matrix() const {
  const double s = std::exp(rapidity_);
  const double b = kind_ == Kind::first ? shift_ : s * shift_;
  return AffineMatrix{{{{s, b}, {0.0, 1.0}}}};
}

std::string AffineMap::serialize() const {
  return to_string(kind_) + "," + format_double(rapidity_) + "," + format_double(shift_);
}

AffineMap AffineMap::parse(const std::string& text) {
  const auto fields = split(text, ',');
  if (fields.size() != 3) throw InvalidInput("affine map must be 'kind,eta,b', got '" + text + "'");
  return AffineMap(parse_double(fields[1]), parse_double(fields[2]), parse_kind(fields[0]));
}

SpectralFunction boost_spectral(const SpectralFunction& g, const Boost& boost) {
  const double s = boost.factor();
  const GridFunction& f = g.data();
  const Interval support{s * f.support().lower, s * f.support().upper};
  GridFunction boosted(f.grid().mapped(s), std::vector<Complex>(f.values().begin(), f.values().end()),
                       support);
  return SpectralFunction(std::move(boosted), g.reference_scale());
}

MultiplierPair multiplier_pair(const SpectralFunction& g, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidInput("multiplier pair needs p > 0");
  const double sigma = g.reference_scale();
  return {std::sqrt(p / sigma), std::sqrt(sigma / p)};
}

double affine_apply(const AffineMap& m, double x) {
  const double s = std::exp(m.rapidity());
  return m.kind() == Kind::first ? s * x + m.shift() : s * (x + m.shift());
}

AffineMap affine_compose(const AffineMap& outer, const AffineMap& inner) {
  const AffineMatrix product = outer.matrix() * inner.matrix();
  // Rapidities add; reading eta back off the product via log would round.
  return AffineMap(outer.rapidity() + inner.rapidity(), product.shift(), Kind::first);
}

AffineMap affine_inverse(const AffineMap& m) {
  const Kind swapped = m.kind() == Kind::first ? Kind::second : Kind::first;
  return AffineMap(-m.rapidity(), -m.shift(), swapped);
}

GridFunction affine_transform(const GridFunction& f, const AffineMap& m) {
  const Grid& g = f.grid();
  const Grid image(affine_apply(m, g.lower()), affine_apply(m, g.upper()), g.count());
  const Interval support{affine_apply(m, f.support().lower), affine_apply(m, f.support().upper)};
  return GridFunction(image, std::vector<Complex>(f.values().begin(), f.values().end()), support);
}

GridFunction wavelet_form(const GridFunction& f, const AffineMap& m) {
  GridFunction image = affine_transform(f, m);
  const double factor = std::exp(-0.5 * m.rapidity());
  std::vector<Complex> values(image.values().begin(), image.values().end());
  for (auto& v : values) v *= factor;
  return image.with_values(std::move(values));
}

}  // namespace covwave
