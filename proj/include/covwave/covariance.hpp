// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include <array>
#include <string>

#include "covwave/numerics.hpp"
#include "covwave/spectral.hpp"

namespace covwave {

/// Lorentz boost along the light cone, by rapidity. Acts on (u, k) as the
/// squeeze u -> e^{-eta} u, k -> e^{eta} k.
class Boost {
 public:
  explicit Boost(double rapidity);
  double rapidity() const { return rapidity_; }
  double factor() const;  ///< e^eta

 private:
  double rapidity_;
};

/// first: squeeze, then translate (x' = e^eta x + b).
/// second: translate, then squeeze (x' = e^eta (x + b)).
enum class Kind { first, second };

std::string to_string(Kind kind);
/// Accepts "first" or "second"; throws InvalidInput otherwise.
Kind parse_kind(const std::string& text);

/// Upper-triangular 2x2 acting on (x, 1).
struct AffineMatrix {
  std::array<std::array<double, 2>, 2> m{};

  double scale() const { return m[0][0]; }
  double shift() const { return m[0][1]; }
  double determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  AffineMatrix operator*(const AffineMatrix& rhs) const;
};

class AffineMap {
 public:
  AffineMap(double rapidity, double shift, Kind kind);

  static AffineMap translation(double b) { return AffineMap(0.0, b, Kind::first); }
  static AffineMap squeeze(double rapidity) { return AffineMap(rapidity, 0.0, Kind::first); }

  double rapidity() const { return rapidity_; }
  double shift() const { return shift_; }
  Kind kind() const { return kind_; }

  /// [[e^eta, b], [0, 1]] for first kind, [[e^eta, e^eta b], [0, 1]] for second.
  AffineMatrix matrix() const;

  /// "kind,eta,b" with round-trip precision.
  std::string serialize() const;
  static AffineMap parse(const std::string& text);

 private:
  double rapidity_;
  double shift_;
  Kind kind_;
};

/// g_eta(k) = g(e^{-eta} k): the k-grid bounds are multiplied by e^eta and
/// the samples are kept as they are. The reference scale is unchanged.
SpectralFunction boost_spectral(const SpectralFunction& g, const Boost& boost);

/// Multipliers (sqrt(p / sigma), sqrt(sigma / p)) for F' and g'.
struct MultiplierPair {
  double field;
  double spectral;
};
MultiplierPair multiplier_pair(const SpectralFunction& g, double p);

double affine_apply(const AffineMap& m, double x);

/// Map whose matrix is outer.matrix() * inner.matrix(), returned in first-kind
/// form.
AffineMap affine_compose(const AffineMap& outer, const AffineMap& inner);

/// Exact inverse. Inverting a first-kind (eta, b) gives the second-kind
/// (-eta, -b) and vice versa, so no rounding enters.
AffineMap affine_inverse(const AffineMap& m);

/// e^{-eta/2} f(m^{-1}(x)): the output grid is the image of f's grid under m,
/// so no interpolation happens and the squared norm is preserved.
GridFunction wavelet_form(const GridFunction& f, const AffineMap& m);

/// f(m^{-1}(x)) without the normalizing factor; squared norm grows by e^eta.
GridFunction affine_transform(const GridFunction& f, const AffineMap& m);

}  // namespace covwave
