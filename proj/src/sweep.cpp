#include "dissdwell/sweep.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dissdwell/classical.hpp"
#include "dissdwell/errors.hpp"
#include "dissdwell/wavepacket.hpp"

namespace dissdwell {
namespace {

std::vector<double> uniform_grid(double lo, double hi, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) grid[i] = lo + (hi - lo) * i / (steps - 1);
  grid.back() = hi;
  return grid;
}

template <typename Body>
auto annotate(double u, Body&& body) {
  const std::string where = "at u = " + std::to_string(u) + ": ";
  try {
    return body();
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(where + e.what(), e.best_estimate());
  } catch (const RegimeError& e) {
    throw RegimeError(where + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(e.field(), where + e.what());
  } catch (const BracketingError& e) {
    throw BracketingError(where + e.what());
  } catch (const DomainError& e) {
    throw DomainError(where + e.what());
  }
}

SweepRow sweep_row(const PhysicalConfig& base, const SweepSpec& spec, double u) {
  PhysicalConfig cfg = base;
  cfg.z0 = 0.5 * u * cfg.sigma;

  SweepRow row;
  row.u = u;
  row.zeta = u / (2.0 * std::numbers::sqrt2);
  row.F_rederived = shape_F(u, Convention::rederived);
  row.F_paper = shape_F(u, Convention::paper_literal);
  const auto closed = dwell_time_closed(cfg, spec.convention);
  row.tau_closed_full = closed.tau_closed_full;
  row.tau_closed_approx = closed.tau_closed_approx;
  if (spec.include_numeric) {
    row.tau_numeric = dwell_time_numeric(cfg, NumericMode::paper_literal);
  }
  if (spec.include_classical) {
    const ClassicalSpec classical{spec.gamma, spec.v0, u};
    if (spec.gamma * u < spec.v0) row.tau_classical_exact = traversal_exact(classical);
    row.tau_classical_quadratic = traversal_series(classical.alpha(), classical.beta(), u);
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const PhysicalConfig& cfg, const SweepSpec& spec) {
  cfg.validate();
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.steps));
  for (double u : uniform_grid(spec.u_min, spec.u_max, spec.steps)) {
    rows.push_back(annotate(u, [&] { return sweep_row(cfg, spec, u); }));
  }
  // Dwell time grows with the barrier width: the int_1^zeta kernel is
  // increasing and so is its prefactor.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].tau_closed_full > rows[i - 1].tau_closed_full)) {
      throw Error("run_sweep: dwell time not strictly increasing between u = " +
                  std::to_string(rows[i - 1].u) + " and u = " + std::to_string(rows[i].u));
    }
  }
  return rows;
}

std::vector<ClassicalRow> run_classical_curve(double gamma, double v0, double w_min,
                                              double w_max, int steps) {
  if (!(w_min > 0.0) || !(w_max > w_min)) {
    throw ValidationError("w_min", "need 0 < w_min < w_max");
  }
  if (steps < 2) throw ValidationError("steps", "must be >= 2");
  std::vector<ClassicalRow> rows;
  for (double w : uniform_grid(w_min, w_max, steps)) {
    rows.push_back(annotate(w, [&] {
      const ClassicalSpec spec{gamma, v0, w};
      return ClassicalRow{w, traversal_exact(spec), traversal_quadratic(spec)};
    }));
  }
  return rows;
}

std::vector<EvolveRow> evolve_table(const PhysicalConfig& cfg, const EvolveGrid& grid) {
  cfg.validate();
  if (!(grid.q_max > grid.q_min)) throw ValidationError("q_max", "must be greater than q_min");
  if (grid.q_steps < 2) throw ValidationError("q_steps", "must be >= 2");
  if (!(grid.t_max > 0.0)) throw ValidationError("t_max", "must be > 0");
  if (grid.t_steps < 2) throw ValidationError("t_steps", "must be >= 2");

  std::vector<EvolveRow> rows;
  for (double t : uniform_grid(0.0, grid.t_max, grid.t_steps)) {
    for (double q : uniform_grid(grid.q_min, grid.q_max, grid.q_steps)) {
      rows.push_back({t, q, density(cfg, q, t), current_canonical(cfg, q, t),
                      current_paper(cfg, q, t)});
    }
  }
  return rows;
}

}  // namespace dissdwell
