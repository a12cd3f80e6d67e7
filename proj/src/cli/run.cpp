// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>

#include "covwave/cli.hpp"
#include "covwave/covariance.hpp"
#include "covwave/io.hpp"
#include "covwave/photon.hpp"

namespace covwave::cli {

std::optional<double> Record::get(const std::string& key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  return std::nullopt;
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_list(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + format_double(xs[i]);
  return out;
}

bool wants_boost_fields(Command c) { return c == Command::boost || c == Command::sweep; }
bool wants_synthesis(Command c) { return c == Command::synthesize || c == Command::sweep; }

struct Outputs {
  std::optional<SpectralFunction> spectrum;
  std::optional<WaveletSignal> signal;
  std::optional<PhotonAmplitude> photon;
};

Record run_point(const RunConfig& cfg, Command command, const SpectralFunction& g, double eta,
                 Outputs& outputs) {
  const Boost boost(eta);
  Record rec{eta, {}};
  auto put = [&rec](const std::string& key, double v) { rec.fields.emplace_back(key, v); };
  put("eta", eta);

  const SpectralFunction boosted = boost_spectral(g, boost);
  const double p = mean_momentum(boosted);
  // Entropy records keep the eta,s_analytic,s_windowed,delta_s layout.
  if (command != Command::entropy) {
    put("p", p);
    put("norm_squared", norm_squared(boosted));
  }

  if (wants_boost_fields(command)) {
    const MultiplierPair pair = multiplier_pair(boosted, p);
    put("sigma", boosted.reference_scale());
    put("multiplier_field", pair.field);
    put("multiplier_spectral", pair.spectral);
  }

  std::optional<SpectralFunction> windowed;
  if (cfg.window) {
    const Window w = boost_window(*cfg.window, boost);
    windowed = apply_window(boosted, w);
    if (command == Command::window || command == Command::sweep) {
      put("window_lower", w.lower());
      put("window_width", w.width());
      put("w_over_p", invariant_ratio(w, p));
      put("windowed_norm_squared", norm_squared(*windowed));
    }
  }
  const SpectralFunction& target = windowed ? *windowed : boosted;
  outputs.spectrum = target;

  const Grid u_grid = cfg.u_grid.grid();
  if (wants_synthesis(command)) {
    WaveletSignal signal = synthesize(target, u_grid, SynthesisMode::wavelet);
    put("signal_norm_squared", signal_norm_squared(signal));
    put("edge_leakage", edge_leakage(signal));
    put("edge_ok", edge_leakage(signal) < cfg.edge_tolerance ? 1.0 : 0.0);
    outputs.signal = std::move(signal);
  }

  const bool bridge = command == Command::photon || (cfg.photon_bridge && wants_synthesis(command));
  if (bridge) {
    const double pt = mean_momentum(target);
    PhotonAmplitude a = to_photon(target, pt);
    put("photon_norm", invariant_norm(a));
    const WaveletSignal field = synthesize_photon_field(a, u_grid);
    const WaveletSignal wavelet =
        outputs.signal ? *outputs.signal : synthesize(target, u_grid, SynthesisMode::wavelet);
    double diff = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < u_grid.count(); ++i) {
      diff = std::max(diff, std::abs(field.data()[i] - wavelet.data()[i]));
      peak = std::max(peak, std::abs(wavelet.data()[i]));
    }
    const double relative = peak > 0.0 ? diff / peak : diff;
    put("max_abs_a_minus_g", diff);
    put("max_abs_a_minus_g_relative", relative);
    put("bridge_ok", relative < cfg.bridge_tolerance ? 1.0 : 0.0);
    outputs.photon = std::move(a);
  }

  if (cfg.window && (command == Command::entropy || command == Command::sweep)) {
    const EntropyReport e = entropy_difference(g, *cfg.window, boost, cfg.density_mode);
    put("s_analytic", e.s_analytic);
    put("s_windowed", e.s_windowed);
    put("delta_s", e.delta_s);
  }
  return rec;
}

std::filesystem::path sibling(const std::filesystem::path& report, const std::string& suffix) {
  std::filesystem::path out = report;
  out.replace_filename(report.stem().string() + suffix);
  return out;
}

void emit_signals(const std::filesystem::path& report, std::size_t index, const Outputs& o) {
  const std::string tag = ".eta" + std::to_string(index);
  if (o.spectrum) write_spectrum_csv(sibling(report, tag + ".spectrum.csv"), o.spectrum->data());
  if (o.signal) write_signal_csv(sibling(report, tag + ".signal.csv"), o.signal->data());
  if (o.photon) write_spectrum_csv(sibling(report, tag + ".photon.csv"), o.photon->data());
}

RunReport run_impl(const RunConfig& cfg, Command command,
                   const std::optional<std::filesystem::path>& signal_dir) {
  RunReport report;
  report.command = command;
  report.timestamp = utc_timestamp();
  auto& echo = report.config_echo;
  echo.emplace_back("spectral", cfg.spectral_label);
  echo.emplace_back("k_grid", cfg.k_grid.serialize());
  echo.emplace_back("window", cfg.window ? cfg.window->serialize() : "none");
  echo.emplace_back("eta", format_list(cfg.etas));
  echo.emplace_back("u_grid", cfg.u_grid.serialize());
  echo.emplace_back("photon_bridge", cfg.photon_bridge ? "true" : "false");
  echo.emplace_back("density_mode", to_string(cfg.density_mode));
  echo.emplace_back("tolerance.photon_bridge", format_double(cfg.bridge_tolerance));
  echo.emplace_back("tolerance.edge_leakage", format_double(cfg.edge_tolerance));

  const SpectralFunction g = construct_spectral(cfg.shape, cfg.k_grid.grid());
  for (std::size_t i = 0; i < cfg.etas.size(); ++i) {
    Outputs outputs;
    report.records.push_back(run_point(cfg, command, g, cfg.etas[i], outputs));
    if (signal_dir) emit_signals(*signal_dir, i, outputs);
  }
  return report;
}

}  // namespace

RunReport run(const RunConfig& config, Command command) {
  return run_impl(config, command, std::nullopt);
}

void write_report(std::ostream& out, const RunReport& report) {
  out << "# covwave run report\n";
  out << "tool_version=" << kToolVersion << '\n';
  out << "timestamp=" << report.timestamp << '\n';
  out << "command=" << to_string(report.command) << '\n';
  for (const auto& [k, v] : report.config_echo) out << "config." << k << '=' << v << '\n';
  out << "record_count=" << report.records.size() << '\n';
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    out << "\n[record]\nindex=" << i << '\n';
    for (const auto& [k, v] : report.records[i].fields) out << k << '=' << format_double(v) << '\n';
  }
}

void write_records_csv(std::ostream& out, const RunReport& report) {
  if (report.records.empty()) return;
  const auto& first = report.records.front().fields;
  for (std::size_t j = 0; j < first.size(); ++j) out << (j ? "," : "") << first[j].first;
  out << '\n';
  for (const auto& rec : report.records) {
    for (std::size_t j = 0; j < rec.fields.size(); ++j) {
      out << (j ? "," : "") << format_double(rec.fields[j].second);
    }
    out << '\n';
  }
}

namespace {

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void print_error(std::ostream& err, ExitCode code, const std::string& message) {
  const char* kind = code == kUsageError ? "usage" : "data";
  err << "covwave: error[" << kind << "] code=" << static_cast<int>(code) << ": "
      << one_line(message) << '\n';
}

}  // namespace

int execute(Command command, const std::filesystem::path& config_path, const Overrides& overrides,
            std::ostream& out, std::ostream& err) {
  const ParseResult parsed = load_config(config_path, overrides, command);

  if (command == Command::check) {
    if (parsed.violations.empty()) {
      out << "ok\n";
      return kSuccess;
    }
    for (const auto& v : parsed.violations) out << "violation: " << v << '\n';
    return kUsageError;
  }
  if (!parsed.config) {
    print_error(err, kUsageError, ConfigError(parsed.violations).what());
    return kUsageError;
  }
  const RunConfig& cfg = *parsed.config;

  RunReport report;
  try {
    std::optional<std::filesystem::path> signal_dir;
    if (cfg.emit_signals) signal_dir = cfg.report_path;
    report = run_impl(cfg, command, signal_dir);
  } catch (const PreconditionError& e) {
    print_error(err, kDataError, e.what());
    return kDataError;
  } catch (const InvalidInput& e) {
    print_error(err, kDataError, e.what());
    return kDataError;
  }

  if (!cfg.report_path) {
    write_report(out, report);
    return kSuccess;
  }
  std::ofstream file(*cfg.report_path);
  std::ofstream csv(sibling(*cfg.report_path, ".records.csv"));
  if (!file || !csv) {
    print_error(err, kUsageError, "cannot write report '" + cfg.report_path->string() + "'");
    return kUsageError;
  }
  write_report(file, report);
  write_records_csv(csv, report);
  out << "wrote " << cfg.report_path->string() << '\n';
  return kSuccess;
}

}  // namespace covwave::cli
