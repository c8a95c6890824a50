#include "dissdwell/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "dissdwell/errors.hpp"

namespace dissdwell {
namespace {

using nlohmann::json;

constexpr double kMinScaledWidth = 2.0 * std::numbers::sqrt2;

void reject_unknown_keys(const json& section, std::string_view name,
                         std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : section.items()) {
    bool found = false;
    for (auto k : known) found = found || key == k;
    if (!found) throw ValidationError(std::string(name) + "." + key, "unknown key");
  }
}

const json* section(const json& root, const char* name) {
  if (!root.contains(name)) return nullptr;
  const json& s = root.at(name);
  if (!s.is_object()) throw ValidationError(name, "must be an object");
  return &s;
}

void read_number(const json& s, const char* section, const char* key, double& out) {
  if (!s.contains(key)) return;
  const json& v = s.at(key);
  if (!v.is_number()) {
    throw ValidationError(std::string(section) + "." + key, "must be a number");
  }
  out = v.get<double>();
}

void read_bool(const json& s, const char* section, const char* key, bool& out) {
  if (!s.contains(key)) return;
  const json& v = s.at(key);
  if (!v.is_boolean()) {
    throw ValidationError(std::string(section) + "." + key, "must be true or false");
  }
  out = v.get<bool>();
}

std::pair<int, int> line_and_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

void SweepSpec::validate() const {
  if (!std::isfinite(u_min) || u_min < kMinScaledWidth * (1.0 - 1e-14)) {
    throw ValidationError("u_min", "must be >= 2*sqrt(2) (zeta >= 1 regime), got " +
                                       std::to_string(u_min));
  }
  if (!std::isfinite(u_max) || !(u_max > u_min)) {
    throw ValidationError("u_max", "must be greater than u_min");
  }
  if (steps < 2) throw ValidationError("steps", "must be >= 2");
  if (!std::isfinite(gamma) || gamma < 0.0) throw ValidationError("gamma", "must be >= 0");
  if (!std::isfinite(v0) || !(v0 > 0.0)) throw ValidationError("v0", "must be > 0");
}

AppConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    throw ValidationError("config", "parse error at line " + std::to_string(line) +
                                        ", column " + std::to_string(column) + ": " + e.what());
  }
  if (!root.is_object()) throw ValidationError("config", "top level must be an object");
  reject_unknown_keys(root, "config", {"physical", "sweep"});

  AppConfig config;
  bool has_r = false;
  if (const json* p = section(root, "physical")) {
    reject_unknown_keys(*p, "physical", {"M", "hbar", "omega0", "eta", "k", "sigma", "z0", "r"});
    auto& phys = config.physical;
    read_number(*p, "physical", "M", phys.M);
    read_number(*p, "physical", "hbar", phys.hbar);
    read_number(*p, "physical", "omega0", phys.omega0);
    read_number(*p, "physical", "eta", phys.eta);
    read_number(*p, "physical", "k", phys.k);
    read_number(*p, "physical", "sigma", phys.sigma);
    read_number(*p, "physical", "z0", phys.z0);
    read_number(*p, "physical", "r", phys.r);
    has_r = p->contains("r");
  }
  if (const json* s = section(root, "sweep")) {
    reject_unknown_keys(*s, "sweep", {"u_min", "u_max", "steps", "convention", "include_numeric",
                                      "include_classical", "gamma", "v0"});
    auto& sweep = config.sweep;
    read_number(*s, "sweep", "u_min", sweep.u_min);
    read_number(*s, "sweep", "u_max", sweep.u_max);
    if (s->contains("steps")) {
      const json& v = s->at("steps");
      if (!v.is_number_integer()) throw ValidationError("sweep.steps", "must be an integer");
      sweep.steps = v.get<int>();
    }
    if (s->contains("convention")) {
      const json& v = s->at("convention");
      const auto parsed = v.is_string() ? parse_convention(v.get<std::string>()) : std::nullopt;
      if (!parsed) throw ValidationError("sweep.convention", "must be \"paper\" or \"rederived\"");
      sweep.convention = *parsed;
    }
    read_bool(*s, "sweep", "include_numeric", sweep.include_numeric);
    read_bool(*s, "sweep", "include_classical", sweep.include_classical);
    read_number(*s, "sweep", "gamma", sweep.gamma);
    read_number(*s, "sweep", "v0", sweep.v0);
  }

  auto& phys = config.physical;
  if (!has_r && phys.M > 0 && phys.hbar > 0 && phys.omega0 > 0 && phys.sigma > 0) {
    phys.r = default_width_ratio(phys.M, phys.hbar, phys.omega0, phys.sigma);
  }
  phys.validate();
  config.sweep.validate();
  return config;
}

AppConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open configuration file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return parse_config(buffer.str());
}

std::string dump_config(const AppConfig& config) {
  const auto& p = config.physical;
  const auto& s = config.sweep;
  nlohmann::ordered_json root;
  root["physical"] = {{"M", p.M},         {"hbar", p.hbar}, {"omega0", p.omega0},
                      {"eta", p.eta},     {"k", p.k},       {"sigma", p.sigma},
                      {"z0", p.z0},       {"r", p.r}};
  root["sweep"] = {{"u_min", s.u_min},
                   {"u_max", s.u_max},
                   {"steps", s.steps},
                   {"convention", std::string(to_string(s.convention))},
                   {"include_numeric", s.include_numeric},
                   {"include_classical", s.include_classical},
                   {"gamma", s.gamma},
                   {"v0", s.v0}};
  return root.dump(2) + "\n";
}

}  // namespace dissdwell
