#pragma once

// Evolution of the incident Gaussian packet on the damped inverted barrier.

#include <complex>

#include "dissdwell/langevin.hpp"

namespace dissdwell {

using ComplexAmplitude = std::complex<double>;

/// Width, center and phase coefficients of the evolved Gaussian at time t.
struct PacketState {
  double t = 0.0;
  double sigma_theta_sq = 0.0;  // sigma^2 * x_sq
  double q_c = 0.0;             // a1 z0 + a2 hbar k / M
  double qdot_c = 0.0;          // da1 z0 + da2 hbar k / M
  double log_width_rate = 0.0;  // d/dt ln sigma_theta^2
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;
};

PacketState packet_state(const PhysicalConfig& cfg, double t);

/// Initial packet (2 pi sigma^2)^(-1/4) exp(-(q - z0)^2 / (4 sigma^2) + i k q).
ComplexAmplitude initial_amplitude(const PhysicalConfig& cfg, double q);

/// Normalized Gaussian density with the moving center q_c(t) and the spread
/// sigma_theta(t).
double density(const PhysicalConfig& cfg, double q, double t);

/// Current that satisfies the continuity equation exactly for `density`:
/// J = rho * (qdot_c + (q - q_c) * log_width_rate / 2).
double current_canonical(const PhysicalConfig& cfg, double q, double t);

/// Current in the closed form used by the dwell-time pipeline, with the
/// static-width Gaussian factor and the overall factor 4 left as they are:
///   J = (2 (q - q_c) L + 4 qdot_c) * x_sq / sqrt(2 pi sigma^2)
///       * exp(-(q - z0)^2 / (2 sigma^2)),     L = d/dt ln sigma_theta^2.
double current_paper(const PhysicalConfig& cfg, double q, double t);

/// Propagator from (q0, 0) to (q, t), t > 0:
///   sqrt(M / (2 pi i hbar a2))
///   * exp[i M / (2 hbar a2) (a1 q0^2 + e^(eta t) da2 q^2 - 2 q0 q)].
ComplexAmplitude greens_function(const PhysicalConfig& cfg, double q, double q0, double t);

/// psi(q, t) = int G(q, q0; t) psi0(q0) dq0 over q0 in z0 +- 8 sigma, by
/// adaptive quadrature of the real and imaginary parts. `rel_tol` is taken
/// relative to an upper bound of |psi|.
ComplexAmplitude propagate_numeric(const PhysicalConfig& cfg, double q, double t,
                                   double rel_tol = 1e-13);

/// Center and variance of |psi|^2 from a log-quadratic fit through three
/// numerically propagated points, exact for a Gaussian.
struct GaussianFit {
  double center = 0.0;
  double width_sq = 0.0;
};

GaussianFit fit_propagated_packet(const PhysicalConfig& cfg, double t);

}  // namespace dissdwell
