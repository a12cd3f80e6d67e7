// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include "covwave/numerics.hpp"
#include "covwave/spectral.hpp"

namespace covwave {

/// Photon amplitude a(k) on a strictly positive momentum grid, frequency
/// omega = k, with the mean momentum p of the spectrum it came from.
class PhotonAmplitude {
 public:
  /// Throws PreconditionError unless the grid lower bound is > 0 and p > 0.
  PhotonAmplitude(GridFunction data, double mean_momentum);

  const GridFunction& data() const { return data_; }
  const Grid& grid() const { return data_.grid(); }
  double mean_momentum() const { return mean_momentum_; }

 private:
  GridFunction data_;
  double mean_momentum_;
};

/// a(k) = sqrt(k / p) g(k).
///
/// Nodes with k <= 0 must carry zero; the amplitude grid then starts at the
/// first positive node. Throws PreconditionError otherwise.
PhotonAmplitude to_photon(const SpectralFunction& g, double p);

/// g(k) = sqrt(p / k) a(k). The result's reference scale is p.
SpectralFunction to_spectral(const PhotonAmplitude& a, double p);

/// int |a(k)|^2 / (2 pi k) dk; unchanged by boosts.
double invariant_norm(const PhotonAmplitude& a);

/// A(u) = int (2 pi k)^(-1/2) a(k) e^{iku} dk. Equals the wavelet G(u) of g
/// when a = to_photon(g, mean_momentum(g)).
WaveletSignal synthesize_photon_field(const PhotonAmplitude& a, const Grid& u_grid);

/// a_eta(k) = a(e^{-eta} k) on the squeezed grid; p scales by e^eta.
PhotonAmplitude boost_photon(const PhotonAmplitude& a, double rapidity);

}  // namespace covwave
