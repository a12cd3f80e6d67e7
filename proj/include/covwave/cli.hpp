// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "covwave/entropy.hpp"
#include "covwave/error.hpp"
#include "covwave/spectral.hpp"
#include "covwave/windowing.hpp"

namespace covwave::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kUsageError = 2, kDataError = 3 };

enum class Command { synthesize, boost, window, photon, entropy, sweep, check };

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& name);

/// Invalid command line or config. `violations` lists every problem found.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

struct GridSpec {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t count = kDefaultGridCount;

  Grid grid() const { return Grid(lower, upper, count); }
  std::string serialize() const;
};

/// Fully resolved run configuration.
struct RunConfig {
  SpectralShape shape = GaussianShape{};
  std::string spectral_label;
  GridSpec k_grid;
  std::optional<Window> window;
  std::vector<double> etas;
  GridSpec u_grid{-40.0, 40.0, kDefaultGridCount};
  bool photon_bridge = false;
  DensityMode density_mode = DensityMode::intensity;
  std::optional<std::filesystem::path> report_path;
  bool emit_signals = false;
  double bridge_tolerance = 1e-8;
  double edge_tolerance = 1e-8;
};

/// Command-line values that override the config file.
struct Overrides {
  std::optional<std::string> eta_list;
  std::optional<std::string> window;
  std::optional<std::size_t> grid_n;
  std::optional<std::string> out;
  std::optional<std::string> density_mode;
  bool emit_signals = false;
};

struct ParseResult {
  std::optional<RunConfig> config;
  std::vector<std::string> violations;
};

/// Parses the JSON text of a config and applies overrides. Relative file
/// names in the config resolve against `base_dir`. Never throws for bad
/// content; every problem is reported in `violations`.
ParseResult parse_config(const std::string& json_text, const Overrides& overrides,
                         Command command, const std::filesystem::path& base_dir = {});

/// Reads and parses a config file (a missing file is a violation).
ParseResult load_config(const std::filesystem::path& path, const Overrides& overrides,
                        Command command);

/// One per-rapidity record; absent optional fields were not requested.
struct Record {
  double eta = 0.0;
  std::vector<std::pair<std::string, double>> fields;
  std::optional<double> get(const std::string& key) const;
};

struct RunReport {
  Command command = Command::sweep;
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<Record> records;
  std::string timestamp;
};

/// Executes `command` for every rapidity in config order. Throws
/// PreconditionError / InvalidInput on numeric failures.
RunReport run(const RunConfig& config, Command command);

/// Key-value report text. The timestamp line is the only nondeterministic one.
void write_report(std::ostream& out, const RunReport& report);
/// CSV with one row per rapidity; the columns are the record fields.
void write_records_csv(std::ostream& out, const RunReport& report);

/// Full CLI behaviour after argument parsing: validates, runs, writes files,
/// prints diagnostics. Returns the process exit code.
int execute(Command command, const std::filesystem::path& config_path, const Overrides& overrides,
            std::ostream& out, std::ostream& err);

}  // namespace covwave::cli
