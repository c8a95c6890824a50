#pragma once

// Dwell time of the packet in the barrier region [0, 2 z0], by direct time
// integration of the current difference and by closed form.
//
// The closed forms hold for zeta = z0 / (sqrt(2) sigma) >= 1. The time
// integral is truncated at T_long, the instant where the spreading factor
// x = sqrt(x_sq) reaches zeta; the substitution y = zeta / x then turns it
// into
//
//   tau = 8 M zeta^2 / (hbar |k| sqrt(pi)) * int_1^zeta exp(-y^2) / y^2 dy.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dissdwell/langevin.hpp"

namespace dissdwell {

/// Selects between the closed-form constants as originally published
/// (`paper_literal`) and the ones re-derived from the time integral
/// (`rederived`).
///
/// paper_literal: prefactor 8 M zeta / (hbar |k| sqrt(pi)) and Erf(u / 2) in
/// the shape function. rederived: prefactor 8 M zeta^2 / (hbar |k| sqrt(pi))
/// and Erf(u / (2 sqrt 2)).
enum class Convention { paper_literal, rederived };

/// Which current the numeric time integral uses.
enum class NumericMode { paper_literal, canonical };

std::string_view to_string(Convention c);
/// Accepts "paper", "paper_literal" and "rederived".
std::optional<Convention> parse_convention(std::string_view text);

struct Diagnostic {
  std::string label;
  double value = 0.0;
};

struct DwellResult {
  double zeta = 0.0;
  double u = 0.0;  // w / sigma
  Convention convention = Convention::rederived;
  double tau_closed_full = 0.0;
  double tau_closed_approx = 0.0;
  std::optional<double> tau_numeric;
  double T_long = 0.0;
  double kernel_value = 0.0;
  double bracket_full = 0.0;
  double bracket_approx = 0.0;
  std::vector<Diagnostic> diagnostics;

  /// Value of the diagnostic with this label, if present.
  std::optional<double> diagnostic(std::string_view label) const;
};

struct GroupDelayInput {
  double tau_d = 0.0;
  double tau_i = 0.0;  // self-interference delay, supplied by the caller
};

/// J(2 z0, t) - J(0, t) from the closed-form current with sigma replaced by
/// sigma_theta(t):
///   4 z0 L x_sq (2 pi sigma_theta^2)^(-1/2) exp(-zeta^2 / x_sq).
double current_difference(const PhysicalConfig& cfg, double t);

/// Time at which x_sq reaches zeta^2. Zero when zeta == 1.
double truncation_time(const PhysicalConfig& cfg);

/// int_1^zeta exp(-y^2) / y^2 dy by adaptive quadrature.
double dwell_kernel(double zeta);

/// 1/e - exp(-zeta^2)/zeta + sqrt(pi) (Erf(1) - Erf(zeta)); the kernel in
/// closed form.
double dwell_bracket_full(double zeta);

/// dwell_bracket_full without the exp(-zeta^2)/zeta term.
double dwell_bracket_approx(double zeta);

/// Shape function F(w / sigma). Dwell time is 2 M / (hbar |k| sqrt(pi)) F
/// in the published normalization.
double shape_F(double u, Convention convention);

/// Closed-form dwell time plus both brackets, the quadrature kernel and
/// labeled discrepancy diagnostics. tau_numeric is left empty.
DwellResult dwell_time_closed(const PhysicalConfig& cfg, Convention convention);

/// (M / (hbar |k|)) int_0^T_long [J(2 z0, t) - J(0, t)] dt.
double dwell_time_numeric(const PhysicalConfig& cfg, NumericMode mode);

/// dwell_time_closed, optionally extended with both numeric routes and their
/// comparison against the closed form.
DwellResult dwell_time(const PhysicalConfig& cfg, Convention convention, bool include_numeric);

/// tau_G = tau_D + tau_I.
double group_delay(const GroupDelayInput& input);

/// Per-configuration discrepancies between the published closed forms, the
/// re-derived ones and the independent numeric routes.
struct ConsistencyRow {
  PhysicalConfig config;
  double zeta = 0.0;
  double u = 0.0;
  double identity_residual = 0.0;             // |bracket_full - kernel|
  double prefactor_ratio_linear_zeta = 0.0;   // 8 M zeta variant / rederived
  double prefactor_ratio_width_squared = 0.0; // 2 M (w/sigma)^2 variant / rederived
  double bracket_without_sqrt_pi = 0.0;       // Erf difference not scaled by sqrt(pi)
  double bracket_without_sqrt_pi_error = 0.0; // that bracket minus the kernel
  double erf_published_argument = 0.0;        // Erf(u / 2)
  double erf_rederived_argument = 0.0;        // Erf(u / (2 sqrt 2))
  double shape_relative_effect = 0.0;         // F_paper / F_rederived - 1
  double tau_numeric_literal = 0.0;
  double tau_numeric_canonical = 0.0;
  double canonical_over_literal = 0.0;
  double numeric_vs_closed_relative = 0.0;
  double propagator_probe_time = 0.0;
  double propagator_width_deviation = 0.0;    // fitted / closed-form width^2 - 1
};

struct ConsistencyReport {
  std::vector<ConsistencyRow> rows;
};

ConsistencyReport consistency_report(std::span<const PhysicalConfig> configs);

}  // namespace dissdwell
