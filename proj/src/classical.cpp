#include "dissdwell/classical.hpp"

#include <cmath>
#include <string>

#include "dissdwell/errors.hpp"

namespace dissdwell {

ClassicalSpec ClassicalSpec::from_series(double alpha, double beta, double w_cl) {
  if (!(beta > 0.0)) throw DomainError("ClassicalSpec: beta must be > 0");
  const double v0 = 1.0 / beta;
  return ClassicalSpec{2.0 * alpha * v0 * v0, v0, w_cl};
}

void ClassicalSpec::validate() const {
  if (!std::isfinite(gamma) || gamma < 0.0) throw DomainError("classical: gamma must be >= 0");
  if (!std::isfinite(v0) || !(v0 > 0.0)) throw DomainError("classical: v0 must be > 0");
  if (!std::isfinite(w_cl) || !(w_cl > 0.0)) throw DomainError("classical: w_cl must be > 0");
  if (gamma * w_cl >= v0) {
    throw RegimeError("classical: particle stops inside the interval (gamma * w_cl = " +
                      std::to_string(gamma * w_cl) + " >= v0 = " + std::to_string(v0) + ")");
  }
}

double traversal_exact(const ClassicalSpec& spec) {
  spec.validate();
  if (spec.gamma == 0.0) return spec.tau0();
  return -std::log1p(-spec.gamma * spec.w_cl / spec.v0) / spec.gamma;
}

double traversal_quadratic(const ClassicalSpec& spec) {
  spec.validate();
  return traversal_series(spec.alpha(), spec.beta(), spec.w_cl);
}

double traversal_series(double alpha, double beta, double w) {
  return alpha * w * w + beta * w;
}

}  // namespace dissdwell
