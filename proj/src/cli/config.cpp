// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "covwave/cli.hpp"
#include "covwave/io.hpp"

namespace covwave::cli {

using nlohmann::json;

std::string to_string(Command c) {
  switch (c) {
    case Command::synthesize:
      return "synthesize";
    case Command::boost:
      return "boost";
    case Command::window:
      return "window";
    case Command::photon:
      return "photon";
    case Command::entropy:
      return "entropy";
    case Command::sweep:
      return "sweep";
    case Command::check:
      return "check";
  }
  return "unknown";
}

std::optional<Command> parse_command(const std::string& name) {
  for (auto c : {Command::synthesize, Command::boost, Command::window, Command::photon,
                 Command::entropy, Command::sweep, Command::check}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : Error(join(violations, "; ")), violations_(std::move(violations)) {}

std::string GridSpec::serialize() const {
  return format_double(lower) + "," + format_double(upper) + "," + std::to_string(count);
}

namespace {

// Collects every violation instead of stopping at the first.
class Reader {
 public:
  std::vector<std::string> violations;

  void fail(const std::string& path, const std::string& message) {
    violations.push_back(path + ": " + message);
  }

  std::optional<double> number(const json& obj, const std::string& key, const std::string& path,
                               bool required) {
    const std::string where = path + "." + key;
    if (!obj.contains(key)) {
      if (required) fail(where, "required number is missing");
      return std::nullopt;
    }
    const json& v = obj.at(key);
    if (!v.is_number()) {
      fail(where, "must be a number");
      return std::nullopt;
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
      fail(where, "must be finite");
      return std::nullopt;
    }
    return x;
  }

  std::optional<bool> boolean(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) return std::nullopt;
    if (!obj.at(key).is_boolean()) {
      fail(path + "." + key, "must be true or false");
      return std::nullopt;
    }
    return obj.at(key).get<bool>();
  }

  std::optional<std::string> string(const json& obj, const std::string& key,
                                    const std::string& path, bool required) {
    if (!obj.contains(key)) {
      if (required) fail(path + "." + key, "required string is missing");
      return std::nullopt;
    }
    if (!obj.at(key).is_string()) {
      fail(path + "." + key, "must be a string");
      return std::nullopt;
    }
    return obj.at(key).get<std::string>();
  }

  std::optional<GridSpec> grid(const json& obj, const std::string& path) {
    if (!obj.is_object()) {
      fail(path, "must be an object with lower, upper, count");
      return std::nullopt;
    }
    const auto lo = number(obj, "lower", path, true);
    const auto hi = number(obj, "upper", path, true);
    const auto n = number(obj, "count", path, false);
    bool ok = lo && hi;
    if (lo && hi && !(*lo < *hi)) {
      fail(path, "Grid invariant violated: lower < upper required");
      ok = false;
    }
    GridSpec spec{lo.value_or(0.0), hi.value_or(0.0), kDefaultGridCount};
    if (n) {
      if (*n < 2 || std::floor(*n) != *n) {
        fail(path + ".count", "Grid invariant violated: count must be an integer >= 2");
        ok = false;
      } else {
        spec.count = static_cast<std::size_t>(*n);
      }
    }
    if (!ok) return std::nullopt;
    return spec;
  }

  std::optional<Window> window(const json& value, const std::string& path) {
    try {
      if (value.is_string()) return Window::parse(value.get<std::string>());
      if (!value.is_object()) {
        fail(path, "must be 'kind,a,w' or an object with kind, a, w");
        return std::nullopt;
      }
      const auto kind = string(value, "kind", path, true);
      const auto a = number(value, "a", path, true);
      const auto w = number(value, "w", path, true);
      if (!kind || !a || !w) return std::nullopt;
      return Window(*a, *w, parse_kind(*kind));
    } catch (const InvalidInput& e) {
      fail(path, std::string("Window invariant violated: ") + e.what());
      return std::nullopt;
    }
  }
};

std::vector<double> parse_eta_list(const std::string& text, Reader& r) {
  std::vector<double> out;
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (trimmed.empty()) return out;
  for (const auto& field : split(text, ',')) {
    try {
      const double x = parse_double(field);
      if (!std::isfinite(x)) throw InvalidInput("rapidity must be finite");
      out.push_back(x);
    } catch (const InvalidInput& e) {
      r.fail("--eta", e.what());
    }
  }
  return out;
}

bool uses_window(Command c) { return c == Command::window || c == Command::entropy; }
bool uses_photon(const RunConfig& cfg, Command c) {
  return c == Command::photon ||
         (cfg.photon_bridge && (c == Command::synthesize || c == Command::sweep || c == Command::check));
}

}  // namespace

ParseResult parse_config(const std::string& json_text, const Overrides& overrides, Command command,
                         const std::filesystem::path& base_dir) {
  Reader r;
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    return {std::nullopt, {std::string("config: not valid JSON: ") + e.what()}};
  }
  if (!root.is_object()) return {std::nullopt, {"config: top level must be a JSON object"}};

  static const std::set<std::string> known = {"spectral", "window",    "boosts",
                                              "synthesis", "output", "tolerances"};
  for (const auto& [key, _] : root.items()) {
    if (!known.count(key)) r.fail(key, "unknown config section");
  }

  RunConfig cfg;
  bool ok = true;

  // output and synthesis first: the k > 0 check below depends on the photon flag.
  if (root.contains("output")) {
    const json& out = root["output"];
    if (!out.is_object()) {
      r.fail("output", "must be an object");
    } else {
      if (auto path = r.string(out, "report", "output", false)) {
        std::filesystem::path p(*path);
        cfg.report_path = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
      }
      if (auto b = r.boolean(out, "emit_signals", "output")) cfg.emit_signals = *b;
      if (auto m = r.string(out, "density_mode", "output", false)) {
        try {
          cfg.density_mode = parse_density_mode(*m);
        } catch (const InvalidInput& e) {
          r.fail("output.density_mode", e.what());
        }
      }
    }
  }
  if (root.contains("synthesis")) {
    const json& syn = root["synthesis"];
    if (!syn.is_object()) {
      r.fail("synthesis", "must be an object");
    } else {
      if (syn.contains("u_grid")) {
        if (auto g = r.grid(syn["u_grid"], "synthesis.u_grid")) cfg.u_grid = *g;
      }
      if (auto b = r.boolean(syn, "photon_bridge", "synthesis")) cfg.photon_bridge = *b;
    }
  }
  if (root.contains("tolerances")) {
    const json& tol = root["tolerances"];
    if (!tol.is_object()) {
      r.fail("tolerances", "must be an object");
    } else {
      if (auto t = r.number(tol, "photon_bridge", "tolerances", false)) {
        if (*t > 0.0) cfg.bridge_tolerance = *t;
        else r.fail("tolerances.photon_bridge", "must be positive");
      }
      if (auto t = r.number(tol, "edge_leakage", "tolerances", false)) {
        if (*t > 0.0) cfg.edge_tolerance = *t;
        else r.fail("tolerances.edge_leakage", "must be positive");
      }
    }
  }

  // spectral
  std::optional<GridSpec> k_grid;
  bool have_shape = false;
  if (!root.contains("spectral") || !root["spectral"].is_object()) {
    r.fail("spectral", "section is required and must be an object");
    ok = false;
  } else {
    const json& sp = root["spectral"];
    if (sp.contains("grid")) {
      k_grid = r.grid(sp["grid"], "spectral.grid");
      if (!k_grid) ok = false;
    }
    const auto family = r.string(sp, "family", "spectral", true);
    if (!family) {
      ok = false;
    } else if (*family == "gaussian") {
      const auto c = r.number(sp, "center", "spectral", true);
      const auto w = r.number(sp, "width", "spectral", true);
      if (w && !(*w > 0.0)) r.fail("spectral.width", "gaussian width must be > 0");
      if (c && w && *w > 0.0) {
        cfg.shape = GaussianShape{*c, *w};
        cfg.spectral_label = "gaussian,center=" + format_double(*c) + ",width=" + format_double(*w);
        have_shape = true;
      }
    } else if (*family == "flat") {
      const auto lo = r.number(sp, "lower", "spectral", true);
      const auto hi = r.number(sp, "upper", "spectral", true);
      if (lo && hi && !(0.0 < *lo && *lo < *hi)) {
        r.fail("spectral", "flat support must satisfy 0 < lower < upper");
      } else if (lo && hi) {
        cfg.shape = FlatShape{*lo, *hi};
        cfg.spectral_label = "flat,lower=" + format_double(*lo) + ",upper=" + format_double(*hi);
        have_shape = true;
      }
    } else if (*family == "samples") {
      if (auto file = r.string(sp, "file", "spectral", true)) {
        std::filesystem::path p(*file);
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        try {
          const GridFunction f = read_spectrum_csv(p);
          cfg.shape = SampledShape{f.grid(), {f.values().begin(), f.values().end()}};
          cfg.spectral_label = "samples,file=" + *file;
          have_shape = true;
        } catch (const Error& e) {
          r.fail("spectral.file", e.what());
        }
      }
    } else {
      r.fail("spectral.family", "must be gaussian, flat or samples, got '" + *family + "'");
    }
    if (!have_shape) ok = false;
  }

  if (have_shape) {
    try {
      const std::size_t count = overrides.grid_n.value_or(k_grid ? k_grid->count : kDefaultGridCount);
      const Grid g = k_grid ? Grid(k_grid->lower, k_grid->upper, count)
                            : (std::holds_alternative<SampledShape>(cfg.shape)
                                   ? std::get<SampledShape>(cfg.shape).grid
                                   : default_grid(cfg.shape, count));
      cfg.k_grid = {g.lower(), g.upper(), g.count()};
      const bool momentum_family = !std::holds_alternative<SampledShape>(cfg.shape);
      if (momentum_family && !(g.lower() > 0.0)) {
        std::string msg = "k > 0 precondition violated: k-grid lower bound is " +
                          format_double(g.lower()) + " but the spectrum must exclude k = 0";
        if (uses_photon(cfg, command)) msg += " (required by the photon bridge a = sqrt(k/p) g)";
        r.fail("spectral.grid.lower", msg);
        ok = false;
      }
    } catch (const InvalidInput& e) {
      r.fail("spectral.grid", e.what());
      ok = false;
    }
  }
  if (overrides.grid_n) {
    if (*overrides.grid_n < 2) r.fail("--grid-n", "Grid invariant violated: count must be >= 2");
    cfg.u_grid.count = *overrides.grid_n;
  }

  // window
  if (overrides.window) {
    cfg.window = r.window(json(*overrides.window), "--window");
  } else if (root.contains("window") && !root["window"].is_null()) {
    cfg.window = r.window(root["window"], "window");
  }
  if (uses_window(command) && !cfg.window) {
    r.fail("window", "a window is required for the '" + to_string(command) + "' command");
  }

  // boosts
  if (overrides.eta_list) {
    cfg.etas = parse_eta_list(*overrides.eta_list, r);
  } else if (root.contains("boosts")) {
    const json& b = root["boosts"];
    const json* list = b.is_object() && b.contains("eta") ? &b["eta"] : (b.is_array() ? &b : nullptr);
    if (!list || !list->is_array()) {
      r.fail("boosts.eta", "must be an array of rapidities");
    } else {
      for (std::size_t i = 0; i < list->size(); ++i) {
        const json& v = (*list)[i];
        if (!v.is_number() || !std::isfinite(v.get<double>())) {
          r.fail("boosts.eta[" + std::to_string(i) + "]", "rapidity must be a finite number");
        } else {
          cfg.etas.push_back(v.get<double>());
        }
      }
    }
  }
  if (cfg.etas.empty()) r.fail("boosts.eta", "rapidity list must be non-empty");

  if (overrides.out) cfg.report_path = std::filesystem::path(*overrides.out);
  if (overrides.emit_signals) cfg.emit_signals = true;
  if (overrides.density_mode) {
    try {
      cfg.density_mode = parse_density_mode(*overrides.density_mode);
    } catch (const InvalidInput& e) {
      r.fail("--density-mode", e.what());
    }
  }
  if (cfg.emit_signals && !cfg.report_path) {
    r.fail("output.report", "signal export needs a report path (--out) to name the files");
  }

  if (!ok || !r.violations.empty()) return {std::nullopt, std::move(r.violations)};
  return {std::move(cfg), {}};
}

ParseResult load_config(const std::filesystem::path& path, const Overrides& overrides,
                        Command command) {
  std::ifstream in(path);
  if (!in) return {std::nullopt, {"--config: cannot read '" + path.string() + "'"}};
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), overrides, command, path.parent_path());
}

}  // namespace covwave::cli
