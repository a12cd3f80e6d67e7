// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include <cmath>
#include <numbers>

#include "covwave/covariance.hpp"
#include "covwave/error.hpp"
#include "covwave/photon.hpp"
#include "covwave/spectral.hpp"
#include "covwave/windowing.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covwave;

namespace {

double max_rel_diff(const GridFunction& a, const GridFunction& b) {
  double peak = 0.0;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    peak = std::max(peak, std::abs(b[i]));
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return peak > 0.0 ? d / peak : d;
}

}  // namespace

TEST_SUITE("photon") {
  TEST_CASE("to_photon values") {
    const Grid grid(1.0, 3.0, 3);  // nodes 1, 2, 3
    const SpectralFunction g(GridFunction(grid, {1.0, 1.0, 1.0}), 2.0);
    const auto a = to_photon(g, 2.0);
    CHECK(a.data()[1] == Complex(1.0));
    CHECK(a.data()[0].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(a.mean_momentum() == 2.0);
    const auto back = to_spectral(PhotonAmplitude(GridFunction(grid, {1.0, 1.0, 1.0}), 2.0), 2.0);
    CHECK(back.data()[0].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(back.reference_scale() == 2.0);
  }

  TEST_CASE("property: round trip through the photon map") {
    oracle::Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
      const Grid grid(rng.uniform(0.1, 2.0), rng.uniform(3.0, 20.0), rng.index(2, 300));
      std::vector<Complex> v(grid.count());
      for (auto& x : v) x = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const SpectralFunction g(GridFunction(grid, v), 1.0);
      const double p = rng.uniform(0.5, 10);
      const auto back = to_spectral(to_photon(g, p), p);
      for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(back.data()[i] - v[i]) <= 1e-14 * std::abs(v[i]) + 1e-300);
    }
  }

  TEST_CASE("invariant norm of a flat amplitude") {
    const PhotonAmplitude a(GridFunction(Grid(1.0, 3.0, 4096), std::vector<Complex>(4096, 1.0)), 2.0);
    const double expect = std::log(3.0) / (2.0 * std::numbers::pi);
    CHECK(std::abs(invariant_norm(a) - expect) < 1e-6);
  }

  TEST_CASE("property: invariant norm is boost invariant") {
    oracle::Rng rng(62);
    const auto g = construct_spectral(GaussianShape{5.0, 0.5}, Grid(0.1, 20.0, 4096));
    const auto a = to_photon(g, mean_momentum(g));
    const double base = invariant_norm(a);
    for (int i = 0; i < 30; ++i) {
      const double eta = rng.uniform(-2, 2);
      CHECK(std::abs(invariant_norm(boost_photon(a, eta)) - base) <= 1e-12 * base);
    }
  }

  TEST_CASE("photon field equals the wavelet signal") {
    const Grid u(-40.0, 40.0, 4096);
    const auto flat = construct_spectral(FlatShape{1.0, 3.0}, Grid(0.5, 3.5, 2048));
    const auto gauss = construct_spectral(GaussianShape{5.0, 0.5}, Grid(0.1, 20.0, 4096));
    const auto windowed = apply_window(gauss, Window(4.5, 1.0, Kind::second));
    for (const auto* g : {&flat, &gauss, &windowed}) {
      const double p = mean_momentum(*g);
      const auto A = synthesize_photon_field(to_photon(*g, p), u);
      const auto G = synthesize(*g, u, SynthesisMode::wavelet);
      CHECK(max_rel_diff(A.data(), G.data()) < 1e-8);
    }
  }

  TEST_CASE("zero amplitude gives a zero field and zero norm") {
    const PhotonAmplitude a(GridFunction(Grid(1.0, 2.0, 33), std::vector<Complex>(33)), 1.5);
    CHECK(invariant_norm(a) == 0.0);
    const auto A = synthesize_photon_field(a, Grid(-1.0, 1.0, 9));
    for (std::size_t m = 0; m < 9; ++m) CHECK(A.data()[m] == Complex(0.0));
  }

  TEST_CASE("property: global phase leaves |A| and the norm unchanged") {
    const auto g = construct_spectral(GaussianShape{5.0, 0.5}, Grid(0.1, 20.0, 1024));
    const auto a = to_photon(g, mean_momentum(g));
    const Grid u(-20.0, 20.0, 129);
    const auto A = synthesize_photon_field(a, u);
    for (double phase : {0.4, -1.1, 3.0}) {
      std::vector<Complex> v(a.data().values().begin(), a.data().values().end());
      for (auto& x : v) x *= std::polar(1.0, phase);
      const PhotonAmplitude r(a.data().with_values(v), a.mean_momentum());
      CHECK(std::abs(invariant_norm(r) - invariant_norm(a)) <= 1e-15 * invariant_norm(a));
      const auto Ar = synthesize_photon_field(r, u);
      for (std::size_t m = 0; m < u.count(); ++m) {
        CHECK(std::abs(std::abs(Ar.data()[m]) - std::abs(A.data()[m])) < 1e-14);
      }
    }
  }

  TEST_CASE("k <= 0 and p <= 0 are rejected") {
    const Grid through_zero(-1.0, 1.0, 21);
    std::vector<Complex> v(21, 1.0);
    CHECK_THROWS_AS(to_photon(SpectralFunction(GridFunction(through_zero, v), 1.0), 1.0), PreconditionError);
    CHECK_THROWS_AS(PhotonAmplitude(GridFunction(through_zero, v), 1.0), PreconditionError);
    CHECK_THROWS_AS(PhotonAmplitude(GridFunction(Grid(1.0, 2.0, 3), {1.0, 1.0, 1.0}), 0.0), PreconditionError);
    const auto g = construct_spectral(FlatShape{1.0, 3.0});
    CHECK_THROWS_AS(to_photon(g, -1.0), PreconditionError);
    CHECK_THROWS_AS(to_spectral(to_photon(g, 2.0), 0.0), PreconditionError);
  }

  TEST_CASE("zero samples at k <= 0 are trimmed") {
    const Grid grid(-1.0, 3.0, 41);
    std::vector<Complex> v(41);
    for (std::size_t i = 0; i < 41; ++i) v[i] = grid.node(i) > 0.5 ? 1.0 : 0.0;
    const auto a = to_photon(SpectralFunction(GridFunction(grid, v), 1.0), 2.0);
    CHECK(a.grid().lower() > 0.0);
    CHECK(a.grid().upper() == 3.0);
  }

  TEST_CASE("property: the photon map commutes with boosts") {
    oracle::Rng rng(63);
    const auto g = construct_spectral(GaussianShape{5.0, 0.5}, Grid(0.1, 20.0, 512));
    const double p = mean_momentum(g);
    for (int i = 0; i < 20; ++i) {
      const double eta = rng.uniform(-2, 2);
      const auto lhs = boost_photon(to_photon(g, p), eta);
      const auto rhs = to_photon(boost_spectral(g, Boost(eta)), std::exp(eta) * p);
      for (std::size_t k = 0; k < lhs.data().size(); ++k) {
        CHECK(std::abs(lhs.data()[k] - rhs.data()[k]) <= 1e-14 * std::max(1.0, std::abs(rhs.data()[k])));
      }
    }
  }

  TEST_CASE("the bridge factor sqrt(k/p) increases with k") {
    const Grid grid(0.5, 10.0, 200);
    const auto a = to_photon(SpectralFunction(GridFunction(grid, std::vector<Complex>(200, 1.0)), 1.0), 3.0);
    for (std::size_t i = 1; i < 200; ++i) CHECK(a.data()[i].real() > a.data()[i - 1].real());
  }
}
