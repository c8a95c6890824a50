#pragma once

// Classical comparator: time for a particle decelerated by linear friction,
// v' = -gamma v, to cover the distance w_cl.

namespace dissdwell {

struct ClassicalSpec {
  double gamma = 0.0;  // friction coefficient
  double v0 = 1.0;     // initial velocity
  double w_cl = 1.0;   // distance to cover

  /// Spec whose second-order traversal time is alpha w^2 + beta w, i.e.
  /// v0 = 1 / beta and gamma = 2 alpha v0^2.
  static ClassicalSpec from_series(double alpha, double beta, double w_cl);

  /// Second-order coefficient of the expansion of traversal_exact in w_cl.
  double alpha() const { return gamma / (2.0 * v0 * v0); }
  double beta() const { return 1.0 / v0; }
  double tau0() const { return w_cl / v0; }

  /// Throws DomainError for invalid fields and RegimeError when the particle
  /// stops before covering w_cl (gamma w_cl >= v0).
  void validate() const;
};

/// (1 / gamma) ln(1 / (1 - gamma w_cl / v0)); w_cl / v0 at gamma = 0.
double traversal_exact(const ClassicalSpec& spec);

/// Truncation of traversal_exact after the w_cl^2 term:
/// alpha w_cl^2 + beta w_cl with alpha = gamma / (2 v0^2), beta = 1 / v0.
double traversal_quadratic(const ClassicalSpec& spec);

/// The polynomial alpha w^2 + beta w for given coefficients, without any
/// friction regime check.
double traversal_series(double alpha, double beta, double w);

}  // namespace dissdwell
