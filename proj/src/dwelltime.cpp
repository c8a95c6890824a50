#include "dissdwell/dwelltime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dissdwell/errors.hpp"
#include "dissdwell/special.hpp"
#include "dissdwell/wavepacket.hpp"

namespace dissdwell {
namespace {

constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;
constexpr double kInvE = 0.36787944117144232159552377016146;
constexpr double kTwoSqrtTwo = 2.0 * std::numbers::sqrt2;

// Relative slack on the zeta >= 1 gate; absorbs rounding in u / (2 sqrt 2)
// and z0 / (sqrt 2 sigma) right at the boundary.
constexpr double kRegimeSlack = 64.0 * std::numeric_limits<double>::epsilon();

constexpr double kKernelTol = 1e-14;
constexpr double kTimeIntegralRelTol = 1e-12;

double gate_zeta(double zeta, const char* op) {
  if (!std::isfinite(zeta) || zeta < 1.0 - kRegimeSlack) {
    throw RegimeError(std::string(op) +
                      ": closed-form regime requires zeta = z0/(sqrt(2) sigma) >= 1, i.e. "
                      "z0 >= sqrt(2) sigma; got zeta = " + std::to_string(zeta));
  }
  return std::max(zeta, 1.0);
}

double erf_difference_from_one(double zeta) {
  // Erf(1) - Erf(zeta) = erfc(zeta) - erfc(1), without cancellation for large zeta.
  return special::erfc(zeta) - special::erfc(1.0);
}

// Integral of f over [0, T] with a tolerance relative to T * max|f| sampled on
// a uniform grid.
template <typename F>
double integrate_over_time(const F& f, double T) {
  double peak = 0.0;
  constexpr int kSamples = 64;
  for (int i = 0; i <= kSamples; ++i) peak = std::max(peak, std::abs(f(T * i / kSamples)));
  const double tol = kTimeIntegralRelTol * T * std::max(peak, std::numeric_limits<double>::min());
  return special::integrate_adaptive(f, 0.0, T, tol).value;
}

double rederived_prefactor(const PhysicalConfig& cfg, double zeta) {
  return 8.0 * zeta * zeta / (cfg.incident_flux() * kSqrtPi);
}

double linear_zeta_prefactor(const PhysicalConfig& cfg, double zeta) {
  return 8.0 * zeta / (cfg.incident_flux() * kSqrtPi);
}

double width_squared_prefactor(const PhysicalConfig& cfg) {
  const double u = cfg.scaled_width();
  return 2.0 * u * u / (cfg.incident_flux() * kSqrtPi);
}

}  // namespace

std::string_view to_string(Convention c) {
  return c == Convention::rederived ? "rederived" : "paper";
}

std::optional<Convention> parse_convention(std::string_view text) {
  if (text == "rederived") return Convention::rederived;
  if (text == "paper" || text == "paper_literal") return Convention::paper_literal;
  return std::nullopt;
}

std::optional<double> DwellResult::diagnostic(std::string_view label) const {
  for (const auto& d : diagnostics) {
    if (d.label == label) return d.value;
  }
  return std::nullopt;
}

double current_difference(const PhysicalConfig& cfg, double t) {
  const auto c = coefficients(cfg, t);
  const double sigma_theta_sq = cfg.sigma * cfg.sigma * c.x_sq;
  const double zeta = cfg.zeta();
  const double log_width_rate = c.dx_sq / c.x_sq;
  return 4.0 * cfg.z0 * log_width_rate * c.x_sq /
         std::sqrt(2.0 * std::numbers::pi * sigma_theta_sq) * std::exp(-zeta * zeta / c.x_sq);
}

double truncation_time(const PhysicalConfig& cfg) {
  cfg.validate();
  const double zeta = gate_zeta(cfg.zeta(), "truncation_time");
  if (zeta == 1.0) return 0.0;
  const double target = zeta * zeta;
  auto excess = [&](double t) { return coefficients(cfg, t).x_sq - target; };

  double hi = 1.0 / cfg.omega0;
  for (int i = 0; excess(hi) < 0.0; ++i) {
    if (i > 200) {
      throw ConvergenceError("truncation_time: spreading factor never reaches zeta^2", hi);
    }
    hi *= 2.0;
  }
  return special::find_root_increasing(excess, 0.0, hi, 0.0);
}

double dwell_kernel(double zeta) {
  zeta = gate_zeta(zeta, "dwell_kernel");
  if (zeta == 1.0) return 0.0;
  auto integrand = [](double y) { return std::exp(-y * y) / (y * y); };
  return special::integrate_adaptive(integrand, 1.0, zeta, kKernelTol).value;
}

double dwell_bracket_full(double zeta) {
  zeta = gate_zeta(zeta, "dwell_bracket_full");
  if (zeta == 1.0) return 0.0;
  return kInvE - std::exp(-zeta * zeta) / zeta + kSqrtPi * erf_difference_from_one(zeta);
}

double dwell_bracket_approx(double zeta) {
  zeta = gate_zeta(zeta, "dwell_bracket_approx");
  return kInvE + kSqrtPi * erf_difference_from_one(zeta);
}

double shape_F(double u, Convention convention) {
  gate_zeta(u / kTwoSqrtTwo, "shape_F");
  if (convention == Convention::rederived) {
    return u * u * dwell_bracket_approx(u / kTwoSqrtTwo);
  }
  return u * u * (kInvE + kSqrtPi * erf_difference_from_one(0.5 * u));
}

DwellResult dwell_time_closed(const PhysicalConfig& cfg, Convention convention) {
  cfg.validate();
  DwellResult out;
  out.zeta = gate_zeta(cfg.zeta(), "dwell_time_closed");
  out.u = cfg.scaled_width();
  out.convention = convention;
  out.bracket_full = dwell_bracket_full(out.zeta);
  out.bracket_approx = dwell_bracket_approx(out.zeta);
  out.kernel_value = dwell_kernel(out.zeta);
  out.T_long = truncation_time(cfg);

  const double rederived = rederived_prefactor(cfg, out.zeta);
  const double prefactor =
      convention == Convention::rederived ? rederived : linear_zeta_prefactor(cfg, out.zeta);
  out.tau_closed_full = prefactor * out.bracket_full;
  out.tau_closed_approx = prefactor * out.bracket_approx;

  out.diagnostics.push_back({"identity_residual", std::abs(out.bracket_full - out.kernel_value)});
  if (out.bracket_full > 0.0) {
    out.diagnostics.push_back(
        {"approx_vs_full_relative", (out.bracket_approx - out.bracket_full) / out.bracket_full});
  }
  out.diagnostics.push_back(
      {"prefactor_ratio_linear_zeta", linear_zeta_prefactor(cfg, out.zeta) / rederived});
  out.diagnostics.push_back(
      {"prefactor_ratio_width_squared", width_squared_prefactor(cfg) / rederived});
  return out;
}

double dwell_time_numeric(const PhysicalConfig& cfg, NumericMode mode) {
  const double T = truncation_time(cfg);
  if (T == 0.0) return 0.0;
  const double q_in = 2.0 * cfg.z0;
  const double q_out = 0.0;
  double integral = 0.0;
  if (mode == NumericMode::paper_literal) {
    integral = integrate_over_time([&](double t) { return current_difference(cfg, t); }, T);
  } else {
    integral = integrate_over_time(
        [&](double t) { return current_canonical(cfg, q_in, t) - current_canonical(cfg, q_out, t); },
        T);
  }
  return integral / cfg.incident_flux();
}

DwellResult dwell_time(const PhysicalConfig& cfg, Convention convention, bool include_numeric) {
  auto out = dwell_time_closed(cfg, convention);
  if (!include_numeric) return out;

  const double literal = dwell_time_numeric(cfg, NumericMode::paper_literal);
  const double canonical = dwell_time_numeric(cfg, NumericMode::canonical);
  out.tau_numeric = literal;
  // The time integral reproduces the re-derived closed form, whatever the
  // reported convention.
  const double closed = rederived_prefactor(cfg, out.zeta) * out.bracket_full;
  if (closed > 0.0) {
    out.diagnostics.push_back({"numeric_vs_closed_relative", (literal - closed) / closed});
  }
  if (literal > 0.0) {
    out.diagnostics.push_back({"canonical_over_literal", canonical / literal});
  }
  out.diagnostics.push_back({"tau_numeric_canonical", canonical});
  return out;
}

double group_delay(const GroupDelayInput& input) {
  if (!std::isfinite(input.tau_d) || input.tau_d < 0.0) {
    throw DomainError("group_delay: dwell time must be finite and >= 0");
  }
  if (!std::isfinite(input.tau_i)) {
    throw DomainError("group_delay: self-interference delay must be finite");
  }
  return input.tau_d + input.tau_i;
}

ConsistencyReport consistency_report(std::span<const PhysicalConfig> configs) {
  ConsistencyReport report;
  report.rows.reserve(configs.size());
  for (const auto& cfg : configs) {
    const auto closed = dwell_time_closed(cfg, Convention::rederived);
    ConsistencyRow row;
    row.config = cfg;
    row.zeta = closed.zeta;
    row.u = closed.u;
    row.identity_residual = *closed.diagnostic("identity_residual");
    row.prefactor_ratio_linear_zeta = *closed.diagnostic("prefactor_ratio_linear_zeta");
    row.prefactor_ratio_width_squared = *closed.diagnostic("prefactor_ratio_width_squared");

    row.bracket_without_sqrt_pi =
        row.zeta == 1.0 ? 0.0
                        : kInvE - std::exp(-row.zeta * row.zeta) / row.zeta +
                              erf_difference_from_one(row.zeta);
    row.bracket_without_sqrt_pi_error = row.bracket_without_sqrt_pi - closed.kernel_value;

    row.erf_published_argument = special::erf(0.5 * row.u);
    row.erf_rederived_argument = special::erf(row.u / kTwoSqrtTwo);
    row.shape_relative_effect =
        shape_F(row.u, Convention::paper_literal) / shape_F(row.u, Convention::rederived) - 1.0;

    row.tau_numeric_literal = dwell_time_numeric(cfg, NumericMode::paper_literal);
    row.tau_numeric_canonical = dwell_time_numeric(cfg, NumericMode::canonical);
    row.canonical_over_literal =
        row.tau_numeric_literal > 0.0 ? row.tau_numeric_canonical / row.tau_numeric_literal : 0.0;
    row.numeric_vs_closed_relative =
        closed.tau_closed_full > 0.0
            ? (row.tau_numeric_literal - closed.tau_closed_full) / closed.tau_closed_full
            : 0.0;

    row.propagator_probe_time = 1.0 / cfg.omega0;
    const auto fit = fit_propagated_packet(cfg, row.propagator_probe_time);
    const auto state = packet_state(cfg, row.propagator_probe_time);
    row.propagator_width_deviation = fit.width_sq / state.sigma_theta_sq - 1.0;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace dissdwell
