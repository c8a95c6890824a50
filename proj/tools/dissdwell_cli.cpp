// dissdwell: dwell time of a Gaussian packet on a dissipative inverted
// parabolic barrier.
//
// Exit codes: 0 success, 2 validation or regime error, 3 numerical
// convergence error, 4 I/O error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dissdwell/config.hpp"
#include "dissdwell/dwelltime.hpp"
#include "dissdwell/errors.hpp"
#include "dissdwell/output.hpp"
#include "dissdwell/sweep.hpp"

namespace {

using namespace dissdwell;

enum ExitCode : int { kOk = 0, kValidation = 2, kNumerical = 3, kIo = 4 };

struct Options {
  std::string config_path;
  std::string convention;
  std::optional<double> eta;
  std::string out;
  bool numeric = false;

  // sweep
  std::optional<double> u_min;
  std::optional<double> u_max;
  std::optional<int> steps;
  std::string plot;
  std::string plot_classical;
  bool classical = false;

  // evolve
  std::optional<double> q_min;
  std::optional<double> q_max;
  int q_steps = 41;
  std::optional<double> t_max;
  int t_steps = 5;

  // classical
  double w_min = 0.25;
  double w_max = 4.75;
  std::optional<double> gamma;
  std::optional<double> v0;
};

AppConfig resolve_config(const Options& opt) {
  AppConfig config = opt.config_path.empty() ? AppConfig{} : load_config(opt.config_path);
  if (opt.eta) config.physical.eta = *opt.eta;
  if (!opt.convention.empty()) {
    const auto c = parse_convention(opt.convention);
    if (!c) throw ValidationError("--convention", "must be paper or rederived");
    config.sweep.convention = *c;
  }
  if (opt.u_min) config.sweep.u_min = *opt.u_min;
  if (opt.u_max) config.sweep.u_max = *opt.u_max;
  if (opt.steps) config.sweep.steps = *opt.steps;
  if (opt.numeric) config.sweep.include_numeric = true;
  if (opt.classical) config.sweep.include_classical = true;
  if (opt.gamma) config.sweep.gamma = *opt.gamma;
  if (opt.v0) config.sweep.v0 = *opt.v0;
  config.physical.validate();
  config.sweep.validate();
  return config;
}

// Writes through `write` either to stdout or to the file at `path`.
template <typename Write>
void with_output(const std::string& path, Write&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(path, "cannot open for writing");
  write(file);
  file.flush();
  if (!file) throw IoError(path, "write failed");
}

void run_dwell(const Options& opt) {
  const auto config = resolve_config(opt);
  const auto result = dwell_time(config.physical, config.sweep.convention, opt.numeric);
  with_output(opt.out, [&](std::ostream& os) { os << dwell_result_json(result); });
}

void run_sweep_command(const Options& opt) {
  const auto config = resolve_config(opt);
  const auto rows = run_sweep(config.physical, config.sweep);
  if (opt.out.empty()) {
    write_sweep_csv(rows, std::cout);
  } else {
    emit_csv(rows, opt.out);
  }
  if (!opt.plot.empty()) emit_plot(rows, opt.plot, PlotKind::dwell_vs_width);
  if (!opt.plot_classical.empty()) emit_plot(rows, opt.plot_classical, PlotKind::classical_vs_width);
}

void run_evolve(const Options& opt) {
  const auto config = resolve_config(opt);
  const auto& p = config.physical;
  EvolveGrid grid;
  grid.q_min = opt.q_min.value_or(-p.z0);
  grid.q_max = opt.q_max.value_or(3.0 * p.z0);
  grid.q_steps = opt.q_steps;
  grid.t_max = opt.t_max.value_or(2.0 / p.omega0);
  grid.t_steps = opt.t_steps;
  const auto rows = evolve_table(p, grid);
  with_output(opt.out, [&](std::ostream& os) { write_evolve_csv(rows, os); });
}

void run_classical(const Options& opt) {
  const auto config = resolve_config(opt);
  const int steps = opt.steps.value_or(config.sweep.steps);
  const auto rows =
      run_classical_curve(config.sweep.gamma, config.sweep.v0, opt.w_min, opt.w_max, steps);
  with_output(opt.out, [&](std::ostream& os) { write_classical_csv(rows, os); });
  if (!opt.plot.empty()) emit_plot(std::span<const ClassicalRow>(rows), opt.plot);
}

void run_report(const Options& opt) {
  const auto config = resolve_config(opt);
  const auto& sweep = config.sweep;
  std::vector<PhysicalConfig> grid;
  for (int i = 0; i < sweep.steps; ++i) {
    PhysicalConfig cfg = config.physical;
    const double u = i + 1 == sweep.steps
                         ? sweep.u_max
                         : sweep.u_min + (sweep.u_max - sweep.u_min) * i / (sweep.steps - 1);
    cfg.z0 = 0.5 * u * cfg.sigma;
    grid.push_back(cfg);
  }
  const auto report = consistency_report(grid);
  with_output(opt.out, [&](std::ostream& os) { os << consistency_report_json(report); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dwell time of a Gaussian packet tunneling through a dissipative inverted "
               "parabolic barrier"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--config", opt.config_path, "JSON configuration file");
  app.add_option("--convention", opt.convention, "closed-form constants: paper or rederived")
      ->check(CLI::IsMember({"paper", "paper_literal", "rederived"}));
  app.add_option("--eta", opt.eta, "override the damping constant");
  app.add_option("--out", opt.out, "output file (default: standard output)");

  auto* dwell = app.add_subcommand("dwell", "single-point dwell time as JSON");
  dwell->add_flag("--numeric", opt.numeric, "also run the time-integral routes");

  auto* sweep = app.add_subcommand("sweep", "dwell time over scaled barrier width, as CSV");
  sweep->add_option("--u-min", opt.u_min, "smallest w/sigma (>= 2 sqrt 2)");
  sweep->add_option("--u-max", opt.u_max, "largest w/sigma");
  sweep->add_option("--steps", opt.steps, "grid points (>= 2)");
  sweep->add_flag("--numeric", opt.numeric, "add the tau_numeric column");
  sweep->add_flag("--classical", opt.classical, "add the classical columns (w_cl = u)");
  sweep->add_option("--gamma", opt.gamma, "classical friction coefficient");
  sweep->add_option("--v0", opt.v0, "classical initial velocity");
  sweep->add_option("--plot", opt.plot, "SVG of dwell time against w/sigma");
  sweep->add_option("--plot-classical", opt.plot_classical, "SVG of the classical columns");

  auto* evolve = app.add_subcommand("evolve", "density and currents on a (q, t) grid, as CSV");
  evolve->add_option("--q-min", opt.q_min, "default -z0");
  evolve->add_option("--q-max", opt.q_max, "default 3 z0");
  evolve->add_option("--q-steps", opt.q_steps, "default 41");
  evolve->add_option("--t-max", opt.t_max, "default 2 / omega0");
  evolve->add_option("--t-steps", opt.t_steps, "default 5");

  auto* classical = app.add_subcommand("classical", "classical traversal time curve, as CSV");
  classical->add_option("--w-min", opt.w_min, "default 0.25");
  classical->add_option("--w-max", opt.w_max, "default 4.75");
  classical->add_option("--steps", opt.steps, "grid points (>= 2)");
  classical->add_option("--gamma", opt.gamma, "friction coefficient (default 2)");
  classical->add_option("--v0", opt.v0, "initial velocity (default 10)");
  classical->add_option("--plot", opt.plot, "SVG of the curve");

  auto* report = app.add_subcommand("report", "consistency report over the sweep grid, as JSON");
  report->add_option("--u-min", opt.u_min, "smallest w/sigma (>= 2 sqrt 2)");
  report->add_option("--u-max", opt.u_max, "largest w/sigma");
  report->add_option("--steps", opt.steps, "grid points (>= 2)");

  for (auto* sub : {dwell, sweep, evolve, classical, report}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (*dwell) run_dwell(opt);
    if (*sweep) run_sweep_command(opt);
    if (*evolve) run_evolve(opt);
    if (*classical) run_classical(opt);
    if (*report) run_report(opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (best estimate " << e.best_estimate() << ")\n";
    return kNumerical;
  } catch (const BracketingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const RegimeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}
