#include "dissdwell/langevin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dissdwell/errors.hpp"
#include "dissdwell/special.hpp"

namespace dissdwell {
namespace {

void require_positive(double value, const char* field) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw ValidationError(field, "must be finite and > 0, got " + std::to_string(value));
  }
}

void require_time(double t, const char* op) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError(std::string(op) + ": time must be finite and >= 0, got " +
                      std::to_string(t));
  }
}

// Tolerance for the bath convolutions, relative to the scale of the result.
constexpr double kBathRelTol = 1e-11;

}  // namespace

void PhysicalConfig::validate() const {
  require_positive(M, "M");
  require_positive(hbar, "hbar");
  require_positive(omega0, "omega0");
  if (!std::isfinite(eta) || eta < 0.0) {
    throw ValidationError("eta", "must be finite and >= 0, got " + std::to_string(eta));
  }
  if (!std::isfinite(k) || k == 0.0) {
    throw ValidationError("k", "must be finite and nonzero");
  }
  require_positive(sigma, "sigma");
  require_positive(z0, "z0");
  require_positive(r, "r");
}

double PhysicalConfig::omega() const { return std::sqrt(omega0 * omega0 + 0.25 * eta * eta); }

double PhysicalConfig::zeta() const { return z0 / (std::sqrt(2.0) * sigma); }

double PhysicalConfig::incident_flux() const { return hbar * std::abs(k) / M; }

double default_width_ratio(double M, double hbar, double omega0, double sigma) {
  return std::sqrt(hbar / (2.0 * M * omega0 * sigma * sigma));
}

double effective_frequency(const PhysicalConfig& cfg) {
  cfg.validate();
  return cfg.omega();
}

CoefficientSet coefficients(const PhysicalConfig& cfg, double t) {
  require_time(t, "coefficients");
  const double w = cfg.omega();
  const double half_eta = 0.5 * cfg.eta;
  const double decay = std::exp(-half_eta * t);
  const double ch = std::cosh(w * t);
  const double sh_over_w = std::sinh(w * t) / w;

  CoefficientSet c;
  c.t = t;
  c.a1 = decay * (ch + half_eta * sh_over_w);
  c.a2 = decay * sh_over_w;
  // d/dt a1 = omega0^2 a2 follows from omega^2 - eta^2/4 = omega0^2.
  c.da1 = cfg.omega0 * cfg.omega0 * c.a2;
  c.da2 = decay * (ch - half_eta * sh_over_w);

  const double r2 = cfg.r * cfg.r;
  const double spread = r2 * r2 * cfg.omega0 * cfg.omega0;
  c.x_sq = c.a1 * c.a1 + spread * c.a2 * c.a2;
  c.dx_sq = 2.0 * (c.a1 * c.da1 + spread * c.a2 * c.da2);
  return c;
}

BathResponse bath_response(const PhysicalConfig& cfg, const BathMode& mode, double t) {
  require_time(t, "bath_response");
  if (!(mode.m > 0.0) || !(mode.omega > 0.0)) {
    throw DomainError("bath_response: mode mass and frequency must be > 0");
  }
  if (t == 0.0 || mode.c == 0.0) return {};

  const double wj = mode.omega;
  auto a2 = [&cfg](double s) { return coefficients(cfg, s).a2; };
  // |integrand| <= a2(t), so t * a2(t) bounds both integrals.
  const double scale = t * std::max(a2(t), 1e-300);
  const double tol = kBathRelTol * scale;

  const auto cos_part = special::integrate_adaptive(
      [&](double s) { return a2(s) * std::cos(wj * (t - s)); }, 0.0, t, tol);
  const auto sin_part = special::integrate_adaptive(
      [&](double s) { return a2(s) * std::sin(wj * (t - s)); }, 0.0, t, tol);

  const double coupling = mode.c / cfg.M;
  return BathResponse{-coupling * cos_part.value, -coupling * sin_part.value / wj};
}

double compose_trajectory(const PhysicalConfig& cfg, double q0, double qdot0,
                          std::span<const BathTerm> bath, double t) {
  const auto c = coefficients(cfg, t);
  double q = c.a1 * q0 + c.a2 * qdot0;
  for (const auto& term : bath) {
    const auto b = bath_response(cfg, term.mode, t);
    q += b.b1 * term.x0 + b.b2 * term.xdot0;
  }
  return q;
}

}  // namespace dissdwell
