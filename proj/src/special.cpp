#include "dissdwell/special.hpp"

#include <numbers>

namespace dissdwell::special {
namespace {

// Below this |x| the positive-term series is used, above it the continued
// fraction for erfc. Both reach full double precision at the crossover.
constexpr double kSeriesCrossover = 2.5;

// erf(x) = 2/sqrt(pi) exp(-x^2) sum_n 2^n x^(2n+1) / (2n+1)!!, x >= 0.
// Every term is positive, so there is no cancellation.
double erf_series(double x) {
  const double two_x_sq = 2.0 * x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 500; ++n) {
    term *= two_x_sq / (2.0 * n + 1.0);
    sum += term;
    if (term <= sum * std::numeric_limits<double>::epsilon()) break;
  }
  return std::numbers::inv_sqrtpi * 2.0 * std::exp(-x * x) * sum;
}

// erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// x > 0, evaluated with the modified Lentz algorithm.
double erfc_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 1000; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 0.5 * std::numeric_limits<double>::epsilon()) break;
  }
  return std::exp(-x * x) * std::numbers::inv_sqrtpi / f;
}

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(name) + ": argument must be finite");
  }
}

}  // namespace

double erf(double x) {
  require_finite(x, "erf");
  const double ax = std::abs(x);
  const double value = ax < kSeriesCrossover ? erf_series(ax) : 1.0 - erfc_continued_fraction(ax);
  return std::signbit(x) ? -value : value;
}

double erfc(double x) {
  require_finite(x, "erfc");
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < kSeriesCrossover) return 1.0 - erf_series(x);
  return erfc_continued_fraction(x);
}

}  // namespace dissdwell::special
