// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include <cmath>
#include <limits>
#include <sstream>

#include "covwave/error.hpp"
#include "covwave/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covwave;

TEST_SUITE("io") {
  TEST_CASE("format_double round trips") {
    oracle::Rng rng(81);
    for (int i = 0; i < 500; ++i) {
      const double x = rng.uniform(-1, 1) * std::pow(10.0, rng.uniform(-30, 30));
      CHECK(parse_double(format_double(x)) == x);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(2.0) == "2");
  }

  TEST_CASE("parse_double rejects junk") {
    CHECK_THROWS_AS(parse_double(""), InvalidInput);
    CHECK_THROWS_AS(parse_double("1.5x"), InvalidInput);
    CHECK_THROWS_AS(parse_double("abc"), InvalidInput);
  }

  TEST_CASE("spectrum csv round trip") {
    const Grid g(0.5, 4.5, 17);
    std::vector<Complex> v(g.count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = {std::sin(0.3 * i), std::cos(1.7 * i) / 3.0};
    std::stringstream buf;
    write_spectrum_csv(buf, GridFunction(g, v));
    const auto back = read_spectrum_csv(buf);
    REQUIRE(back.size() == v.size());
    CHECK(back.grid().lower() == g.lower());
    CHECK(back.grid().upper() == g.upper());
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(back[i] == v[i]);
  }

  TEST_CASE("signal csv has a modulus column") {
    std::stringstream buf;
    write_signal_csv(buf, GridFunction(Grid(0.0, 1.0, 2), {Complex(3.0, 4.0), 0.0}));
    std::string header;
    std::string first;
    std::getline(buf, header);
    std::getline(buf, first);
    CHECK(header == "u,re,im,abs");
    CHECK(first == "0,3,4,5");
  }

  TEST_CASE("malformed spectrum files") {
    std::stringstream wrong_header("x,y\n1,2\n");
    CHECK_THROWS_AS(read_spectrum_csv(wrong_header), InvalidInput);
    std::stringstream uneven("k,re,im\n1,0,0\n2,0,0\n4,0,0\n");
    CHECK_THROWS_AS(read_spectrum_csv(uneven), InvalidInput);
    std::stringstream short_row("k,re,im\n1,0\n2,0,0\n");
    CHECK_THROWS_AS(read_spectrum_csv(short_row), InvalidInput);
    std::stringstream one_row("k,re,im\n1,0,0\n");
    CHECK_THROWS_AS(read_spectrum_csv(one_row), InvalidInput);
  }
}
