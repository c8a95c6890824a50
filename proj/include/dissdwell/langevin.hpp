#pragma once

// Solution coefficients of the quantum Langevin equation for an ohmically
// damped inverted oscillator,
//
//   q'' + eta q' - omega0^2 q = f(t),
//
// together with the physical configuration every later module consumes.

#include <span>

namespace dissdwell {

/// Physical parameters of the barrier, the bath damping and the incident
/// Gaussian packet. Units are whatever the caller chooses, as long as they
/// are consistent; the defaults are M = hbar = omega0 = 1.
struct PhysicalConfig {
  double M = 1.0;        // mass
  double hbar = 1.0;     // reduced Planck constant
  double omega0 = 1.0;   // barrier curvature frequency
  double eta = 0.5;      // ohmic damping constant
  double k = 1.0;        // signed carrier wavenumber
  double sigma = 0.70710678118654752440;  // initial packet width, 1/sqrt(2)
  double z0 = 2.0;       // initial packet center, right of the barrier top
  double r = 1.0;        // width ratio in the spreading factor

  /// Throws ValidationError naming the first offending field.
  void validate() const;

  /// sqrt(omega0^2 + eta^2 / 4).
  double omega() const;
  /// Dimensionless barrier-width parameter z0 / (sqrt(2) sigma).
  double zeta() const;
  /// Barrier width w = 2 z0.
  double width() const { return 2.0 * z0; }
  /// Scaled barrier width w / sigma = 2 sqrt(2) zeta.
  double scaled_width() const { return width() / sigma; }
  /// Incident flux hbar |k| / M.
  double incident_flux() const;

  bool operator==(const PhysicalConfig&) const = default;
};

/// Width ratio r = sqrt(hbar / (2 M omega0 sigma^2)). With this value the
/// spreading factor a1^2 + r^4 omega0^2 a2^2 is exactly the position variance
/// growth of a minimum-uncertainty packet of width sigma.
double default_width_ratio(double M, double hbar, double omega0, double sigma);

/// Homogeneous solution coefficients and the spreading factor at time t.
struct CoefficientSet {
  double t = 0.0;
  double a1 = 1.0;    // response to q(0)
  double a2 = 0.0;    // response to q'(0)
  double da1 = 0.0;
  double da2 = 1.0;
  double x_sq = 1.0;  // a1^2 + r^4 omega0^2 a2^2
  double dx_sq = 0.0; // time derivative of x_sq
};

/// One harmonic bath oscillator coupled linearly to the system coordinate.
struct BathMode {
  double c = 0.0;        // coupling constant
  double m = 1.0;        // mass
  double omega = 1.0;    // natural frequency
};

/// Coefficients multiplying a bath mode's initial position (b1) and initial
/// velocity (b2) in the system trajectory.
struct BathResponse {
  double b1 = 0.0;
  double b2 = 0.0;
};

/// Initial state of one bath mode together with the mode itself.
struct BathTerm {
  BathMode mode;
  double x0 = 0.0;
  double xdot0 = 0.0;
};

double effective_frequency(const PhysicalConfig& cfg);

/// a1, a2 and their analytic derivatives at t >= 0.
CoefficientSet coefficients(const PhysicalConfig& cfg, double t);

/// Duhamel convolutions of a2 against the bath forcing:
///   b1 = -(c/M)           int_0^t a2(s) cos(omega_j (t - s)) ds
///   b2 = -(c/(M omega_j)) int_0^t a2(s) sin(omega_j (t - s)) ds
BathResponse bath_response(const PhysicalConfig& cfg, const BathMode& mode, double t);

/// q(t) = a1 q0 + a2 q'0 + sum_j (b1_j x_j0 + b2_j x'_j0).
double compose_trajectory(const PhysicalConfig& cfg, double q0, double qdot0,
                          std::span<const BathTerm> bath, double t);

}  // namespace dissdwell
