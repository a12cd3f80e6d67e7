// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include "covwave/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "covwave/error.hpp"

namespace covwave {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidInput("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void write_spectrum_csv(std::ostream& out, const GridFunction& f) {
  out << "k,re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << format_double(f.grid().node(i)) << ',' << format_double(f[i].real()) << ','
        << format_double(f[i].imag()) << '\n';
  }
}

void write_signal_csv(std::ostream& out, const GridFunction& f) {
  out << "u,re,im,abs\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << format_double(f.grid().node(i)) << ',' << format_double(f[i].real()) << ','
        << format_double(f[i].imag()) << ',' << format_double(std::abs(f[i])) << '\n';
  }
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

void write_spectrum_csv(const std::filesystem::path& path, const GridFunction& f) {
  auto out = open_for_write(path);
  write_spectrum_csv(out, f);
}

void write_signal_csv(const std::filesystem::path& path, const GridFunction& f) {
  auto out = open_for_write(path);
  write_signal_csv(out, f);
}

GridFunction read_spectrum_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("spectrum file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "k,re,im") throw InvalidInput("spectrum file must start with header 'k,re,im'");

  std::vector<double> ks;
  std::vector<Complex> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw InvalidInput("spectrum line " + std::to_string(line_no) + " needs 3 fields");
    }
    try {
      ks.push_back(parse_double(fields[0]));
      values.emplace_back(parse_double(fields[1]), parse_double(fields[2]));
    } catch (const InvalidInput& e) {
      throw InvalidInput("spectrum line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (ks.size() < 2) throw InvalidInput("spectrum file needs at least two nodes");

  const Grid grid(ks.front(), ks.back(), ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (std::abs(ks[i] - grid.node(i)) > 1e-9 * grid.spacing()) {
      throw InvalidInput("spectrum k column is not uniformly spaced at row " + std::to_string(i));
    }
  }
  return GridFunction(grid, std::move(values));
}

GridFunction read_spectrum_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open spectrum file '" + path.string() + "'");
  return read_spectrum_csv(in);
}

}  // namespace covwave
