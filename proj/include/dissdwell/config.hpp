#pragma once

// JSON configuration: a `physical` section holding PhysicalConfig and a
// `sweep` section holding SweepSpec. Every key is optional.
//
//   {
//     "physical": {"M": 1, "hbar": 1, "omega0": 1, "eta": 0.5, "k": 1,
//                  "sigma": 0.7071067811865476, "z0": 2, "r": 1},
//     "sweep": {"u_min": 2.8284271247461903, "u_max": 20, "steps": 64,
//               "convention": "rederived", "include_numeric": false,
//               "include_classical": false, "gamma": 2, "v0": 10}
//   }
//
// An omitted `r` is derived from the other physical fields through
// default_width_ratio.

#include <filesystem>
#include <string>
#include <string_view>

#include "dissdwell/dwelltime.hpp"
#include "dissdwell/langevin.hpp"

namespace dissdwell {

struct SweepSpec {
  double u_min = 2.0 * 1.41421356237309504880;  // zeta = 1
  double u_max = 20.0;
  int steps = 64;
  Convention convention = Convention::rederived;
  bool include_numeric = false;
  bool include_classical = false;
  double gamma = 2.0;  // classical friction; with v0 = 10 gives alpha = 0.01, beta = 0.1
  double v0 = 10.0;

  void validate() const;

  bool operator==(const SweepSpec&) const = default;
};

struct AppConfig {
  PhysicalConfig physical;
  SweepSpec sweep;

  bool operator==(const AppConfig&) const = default;
};

/// Parses and validates a configuration document. Syntax errors become
/// ValidationError("config", ...) with line and column; bad values become
/// ValidationError naming the field.
AppConfig parse_config(std::string_view text);

/// Reads and parses a file. Missing or unreadable files throw IoError.
AppConfig load_config(const std::filesystem::path& path);

/// Serializes every field, so parse_config(dump_config(c)) == c.
std::string dump_config(const AppConfig& config);

}  // namespace dissdwell
