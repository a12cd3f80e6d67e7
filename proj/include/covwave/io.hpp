// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "covwave/numerics.hpp"

namespace covwave {

class SpectralFunction;
class WaveletSignal;
class PhotonAmplitude;

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);
/// Whole-string parse; throws InvalidInput on junk or trailing characters.
double parse_double(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);

// Delimited text exports. Spectra and photon amplitudes use the header
// `k,re,im`; signals use `u,re,im,abs`. One node per line.
void write_spectrum_csv(std::ostream& out, const GridFunction& f);
void write_signal_csv(std::ostream& out, const GridFunction& f);
void write_spectrum_csv(const std::filesystem::path& path, const GridFunction& f);
void write_signal_csv(const std::filesystem::path& path, const GridFunction& f);

/// Reads `k,re,im` samples. The k column must be uniformly spaced (relative
/// deviation below 1e-9 of the spacing).
GridFunction read_spectrum_csv(std::istream& in);
GridFunction read_spectrum_csv(const std::filesystem::path& path);

}  // namespace covwave
