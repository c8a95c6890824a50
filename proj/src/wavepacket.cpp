#include "dissdwell/wavepacket.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dissdwell/errors.hpp"
#include "dissdwell/special.hpp"

namespace dissdwell {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Half-width of the initial-position window, in units of sigma.
constexpr double kPropagationWindow = 8.0;

double gaussian(double offset, double variance) {
  return std::exp(-offset * offset / (2.0 * variance)) / std::sqrt(kTwoPi * variance);
}

}  // namespace

PacketState packet_state(const PhysicalConfig& cfg, double t) {
  const auto c = coefficients(cfg, t);
  const double drift = cfg.hbar * cfg.k / cfg.M;

  PacketState s;
  s.t = t;
  s.sigma_theta_sq = cfg.sigma * cfg.sigma * c.x_sq;
  s.q_c = c.a1 * cfg.z0 + c.a2 * drift;
  s.qdot_c = c.da1 * cfg.z0 + c.da2 * drift;
  s.log_width_rate = c.dx_sq / c.x_sq;

  const double growth = std::exp(cfg.eta * t);
  const double phase_scale = cfg.M * growth / (4.0 * cfg.hbar);
  const double L = s.log_width_rate;
  s.c2 = phase_scale * L;
  s.c1 = phase_scale * (-2.0 * s.q_c * L + 4.0 * s.qdot_c);
  s.c0 = 0.25 * cfg.k * c.a2 * growth * (s.q_c * L - 2.0 * s.qdot_c) +
         s.q_c * cfg.z0 / (4.0 * s.sigma_theta_sq) * cfg.omega0 * c.a2 * cfg.r * cfg.r;
  return s;
}

ComplexAmplitude initial_amplitude(const PhysicalConfig& cfg, double q) {
  const double offset = q - cfg.z0;
  const double envelope = std::pow(kTwoPi * cfg.sigma * cfg.sigma, -0.25) *
                          std::exp(-offset * offset / (4.0 * cfg.sigma * cfg.sigma));
  return std::polar(envelope, cfg.k * q);
}

double density(const PhysicalConfig& cfg, double q, double t) {
  const auto s = packet_state(cfg, t);
  return gaussian(q - s.q_c, s.sigma_theta_sq);
}

double current_canonical(const PhysicalConfig& cfg, double q, double t) {
  const auto s = packet_state(cfg, t);
  const double rho = gaussian(q - s.q_c, s.sigma_theta_sq);
  return rho * (s.qdot_c + 0.5 * (q - s.q_c) * s.log_width_rate);
}

double current_paper(const PhysicalConfig& cfg, double q, double t) {
  const auto c = coefficients(cfg, t);
  const auto s = packet_state(cfg, t);
  const double sigma_sq = cfg.sigma * cfg.sigma;
  const double offset = q - cfg.z0;
  const double bracket = 2.0 * (q - s.q_c) * s.log_width_rate + 4.0 * s.qdot_c;
  return bracket * c.x_sq / std::sqrt(kTwoPi * sigma_sq) *
         std::exp(-offset * offset / (2.0 * sigma_sq));
}

ComplexAmplitude greens_function(const PhysicalConfig& cfg, double q, double q0, double t) {
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw DomainError("greens_function: propagator is singular at t <= 0, got t = " +
                      std::to_string(t));
  }
  const auto c = coefficients(cfg, t);
  // sqrt(M / (2 pi i hbar a2)) on the principal branch: modulus times e^(-i pi/4).
  const double modulus = std::sqrt(cfg.M / (kTwoPi * cfg.hbar * c.a2));
  const ComplexAmplitude prefactor = std::polar(modulus, -0.25 * std::numbers::pi);
  const double action_scale = cfg.M / (2.0 * cfg.hbar * c.a2);
  const double quadratic = c.a1 * q0 * q0 + std::exp(cfg.eta * t) * c.da2 * q * q - 2.0 * q0 * q;
  return prefactor * std::polar(1.0, action_scale * quadratic);
}

ComplexAmplitude propagate_numeric(const PhysicalConfig& cfg, double q, double t,
                                   double rel_tol) {
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw DomainError("propagate_numeric: requires t > 0, got t = " + std::to_string(t));
  }
  const double lo = cfg.z0 - kPropagationWindow * cfg.sigma;
  const double hi = cfg.z0 + kPropagationWindow * cfg.sigma;

  // |G| * int |psi0| bounds |psi|.
  const auto c = coefficients(cfg, t);
  const double bound = std::sqrt(cfg.M / (kTwoPi * cfg.hbar * c.a2)) *
                       std::pow(8.0 * std::numbers::pi * cfg.sigma * cfg.sigma, 0.25);
  const double tol = rel_tol * bound;

  auto integrand = [&](double q0) { return greens_function(cfg, q, q0, t) * initial_amplitude(cfg, q0); };
  const auto re = special::integrate_adaptive([&](double q0) { return integrand(q0).real(); }, lo, hi, tol);
  const auto im = special::integrate_adaptive([&](double q0) { return integrand(q0).imag(); }, lo, hi, tol);
  return {re.value, im.value};
}

GaussianFit fit_propagated_packet(const PhysicalConfig& cfg, double t) {
  const auto guess = packet_state(cfg, t);
  const double m = guess.q_c;
  const double d = std::sqrt(guess.sigma_theta_sq);
  const double y_minus = std::log(std::norm(propagate_numeric(cfg, m - d, t)));
  const double y_mid = std::log(std::norm(propagate_numeric(cfg, m, t)));
  const double y_plus = std::log(std::norm(propagate_numeric(cfg, m + d, t)));

  const double curvature = (y_plus + y_minus - 2.0 * y_mid) / (2.0 * d * d);
  const double slope = (y_plus - y_minus) / (2.0 * d);
  if (!(curvature < 0.0)) {
    throw ConvergenceError("fit_propagated_packet: propagated density is not log-concave", 0.0);
  }
  return GaussianFit{m - slope / (2.0 * curvature), -1.0 / (2.0 * curvature)};
}

}  // namespace dissdwell
