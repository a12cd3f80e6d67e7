// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include <cmath>
#include <numbers>

#include "covwave/entropy.hpp"
#include "covwave/error.hpp"
#include "covwave/spectral.hpp"
#include "covwave/windowing.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covwave;

namespace {

const GaussianShape kGauss{5.0, 0.5};
const Grid kGrid(0.1, 20.0, 4096);
const Window kWindow(4.5, 1.0, Kind::second);

ProbabilityDensity uniform_on(double lo, double hi, std::size_t n = 201) {
  return ProbabilityDensity(GridFunction(Grid(lo, hi, n), std::vector<Complex>(n, 1.0 / (hi - lo))));
}

}  // namespace

TEST_SUITE("entropy") {
  TEST_CASE("density of a flat spectrum is uniform") {
    const auto rho = density_from_spectral(construct_spectral(FlatShape{1.0, 3.0}));
    for (std::size_t i = 0; i < rho.data().size(); i += 50) CHECK(rho[i] == doctest::Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("density of a gaussian has standard deviation s / sqrt(2)") {
    const auto rho = density_from_spectral(construct_spectral(kGauss, kGrid));
    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < kGrid.count(); ++i) {
      const double k = kGrid.node(i);
      m1 += k * rho[i];
      m2 += k * k * rho[i];
    }
    m1 *= kGrid.spacing();
    m2 *= kGrid.spacing();
    CHECK(std::abs(std::sqrt(m2 - m1 * m1) - 0.5 / std::sqrt(2.0)) < 1e-4);
  }

  TEST_CASE("entropy examples") {
    CHECK(entropy(uniform_on(0.0, 2.0)) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(std::abs(entropy(uniform_on(3.0, 4.0))) < 1e-14);
    const double s = entropy(density_from_spectral(construct_spectral(kGauss, kGrid)));
    CHECK(std::abs(s - oracle::normal_entropy(0.5 / std::sqrt(2.0))) < 1e-4);
  }

  TEST_CASE("boost_density examples") {
    const auto rho = boost_density(uniform_on(1.0, 3.0), Boost(std::log(2.0)));
    CHECK(rho.grid().lower() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rho.grid().upper() == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(rho[0] == doctest::Approx(0.25).epsilon(1e-15));
    const auto gauss = density_from_spectral(construct_spectral(kGauss, kGrid));
    const double shift = entropy(boost_density(gauss, Boost(std::log(2.0)))) - entropy(gauss);
    CHECK(std::abs(shift - std::log(2.0)) < 1e-6);
  }

  TEST_CASE("entropy difference of the gaussian under a unit window") {
    const auto g = construct_spectral(kGauss, kGrid);
    const auto rest = entropy_difference(g, kWindow, Boost(0.0));
    CHECK(std::abs(rest.delta_s - oracle::kDeltaS0) < 1e-4);
    CHECK(rest.rapidity == 0.0);
    CHECK(rest.s_analytic - rest.s_windowed == rest.delta_s);
    const auto moved = entropy_difference(g, kWindow, Boost(1.0));
    CHECK(std::abs(moved.delta_s - oracle::kDeltaS0) < 1e-4);
    CHECK(moved.delta_s > 0.0);
  }

  TEST_CASE("a window covering everything gives zero difference") {
    const auto g = construct_spectral(kGauss, kGrid);
    const auto r = entropy_difference(g, Window(0.05, 30.0, Kind::second), Boost(0.7));
    CHECK(std::abs(r.delta_s) < 1e-9);
  }

  TEST_CASE("photon mode gives the same density") {
    const auto g = construct_spectral(kGauss, kGrid);
    const auto a = entropy_difference(g, kWindow, Boost(0.3), DensityMode::intensity);
    const auto b = entropy_difference(g, kWindow, Boost(0.3), DensityMode::photon);
    CHECK(std::abs(a.delta_s - b.delta_s) < 1e-10);
    CHECK(parse_density_mode("photon") == DensityMode::photon);
    CHECK_THROWS_AS(parse_density_mode("bogus"), InvalidInput);
  }

  TEST_CASE("property: a boost shifts the entropy by eta") {
    oracle::Rng rng(71);
    const Grid grid(0.5, 10.0, 1500);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Complex> v(grid.count());
      const double c = rng.uniform(2, 8);
      const double w = rng.uniform(0.3, 1.5);
      const double tilt = rng.uniform(0, 0.5);
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double k = grid.node(i);
        v[i] = std::exp(-(k - c) * (k - c) / (2 * w * w)) * (1.0 + tilt * std::sin(3 * k)) + 1e-3;
      }
      const auto rho = ProbabilityDensity::normalized(GridFunction(grid, v));
      const double s0 = entropy(rho);
      for (double eta : {-1.0, -0.3, 0.3, 1.0}) {
        CHECK(std::abs(entropy(boost_density(rho, Boost(eta))) - s0 - eta) < 1e-5);
      }
    }
  }

  TEST_CASE("property: the entropy difference is boost invariant") {
    oracle::Rng rng(72);
    const auto g = construct_spectral(kGauss, kGrid);
    const double base = entropy_difference(g, kWindow, Boost(0.0)).delta_s;
    for (int i = 0; i < 20; ++i) {
      const double eta = rng.uniform(-1.5, 1.5);
      CHECK(std::abs(entropy_difference(g, kWindow, Boost(eta)).delta_s - base) < 1e-9);
    }
  }

  TEST_CASE("property: translating the grid leaves the entropy alone") {
    oracle::Rng rng(73);
    const auto rho = density_from_spectral(construct_spectral(kGauss, kGrid));
    const double s = entropy(rho);
    for (int i = 0; i < 10; ++i) {
      const double b = rng.uniform(-5, 5);
      const auto& f = rho.data();
      const ProbabilityDensity moved(
          GridFunction(f.grid().mapped(1.0, b), {f.values().begin(), f.values().end()},
                       {f.support().lower + b, f.support().upper + b}));
      CHECK(std::abs(entropy(moved) - s) < 1e-8);
    }
  }

  TEST_CASE("oracle: frozen entropy difference reproduces") {
    const double fresh = oracle::gaussian_window_delta_s(5.0, 0.5, 0.1, 20.0, 4.5, 5.5, 200000);
    CHECK(std::abs(fresh - oracle::kDeltaS0) < 1e-12);
  }

  TEST_CASE("malformed densities are rejected") {
    const Grid grid(0.0, 1.0, 3);
    CHECK_THROWS_AS(ProbabilityDensity(GridFunction(grid, {1.0, -0.1, 1.0})), InvalidInput);
    CHECK_THROWS_AS(ProbabilityDensity(GridFunction(grid, {2.0, 2.0, 2.0})), InvalidInput);
    CHECK_THROWS_AS(ProbabilityDensity(GridFunction(grid, {Complex(1.0, 0.1), 1.0, 1.0})), InvalidInput);
    CHECK_THROWS_AS(ProbabilityDensity::normalized(GridFunction(grid, {0.0, 0.0, 0.0})), PreconditionError);
    const auto zero = construct_spectral(SampledShape{Grid(1.0, 2.0, 5), std::vector<Complex>(5)});
    CHECK_THROWS_AS(density_from_spectral(zero), PreconditionError);
  }
}
