#pragma once

// Tabulations behind the CLI: dwell time against scaled barrier width, the
// classical traversal curve and the density/current field of the packet.

#include <optional>
#include <vector>

#include "dissdwell/config.hpp"

namespace dissdwell {

struct SweepRow {
  double u = 0.0;
  double zeta = 0.0;
  double F_rederived = 0.0;
  double F_paper = 0.0;
  double tau_closed_full = 0.0;
  double tau_closed_approx = 0.0;
  std::optional<double> tau_numeric;
  std::optional<double> tau_classical_exact;
  std::optional<double> tau_classical_quadratic;
};

/// Uniform grid over u = w / sigma in [u_min, u_max]; each row moves z0 to
/// u sigma / 2 and keeps the other physical fields. The classical columns
/// use w_cl = u: the quadratic column is the polynomial alpha u^2 + beta u,
/// the exact column is left empty where the particle stops before covering
/// u. Errors are rethrown with the offending u prepended.
std::vector<SweepRow> run_sweep(const PhysicalConfig& cfg, const SweepSpec& spec);

struct ClassicalRow {
  double w_cl = 0.0;
  double tau_exact = 0.0;
  double tau_quadratic = 0.0;
};

std::vector<ClassicalRow> run_classical_curve(double gamma, double v0, double w_min,
                                              double w_max, int steps);

struct EvolveRow {
  double t = 0.0;
  double q = 0.0;
  double density = 0.0;
  double current_canonical = 0.0;
  double current_paper = 0.0;
};

struct EvolveGrid {
  double q_min = 0.0;
  double q_max = 0.0;
  int q_steps = 41;
  double t_max = 2.0;
  int t_steps = 5;
};

/// Rows ordered by t, then q.
std::vector<EvolveRow> evolve_table(const PhysicalConfig& cfg, const EvolveGrid& grid);

}  // namespace dissdwell
