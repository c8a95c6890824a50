#pragma once

// Numerical primitives shared by the physics modules: the Gauss error
// function, adaptive Gauss-Kronrod quadrature and bracketed bisection.

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <utility>

#include "dissdwell/errors.hpp"

namespace dissdwell::special {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Gauss error function, computed without the platform libm erf.
/// Throws DomainError for non-finite input.
double erf(double x);

/// Complementary error function 1 - erf(x); accurate in the far tail.
double erfc(double x);

inline constexpr int kMaxQuadratureDepth = 60;
inline constexpr std::size_t kMaxQuadratureIntervals = 200000;

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule, nodes in descending
// order. Odd indices are the Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  int depth;

  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel gauss_kronrod_15(const F& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  if (!std::isfinite(fc)) {
    throw DomainError("integrand is not finite at x = " + std::to_string(center));
  }
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double fl = f(center - dx);
    const double fr = f(center + dx);
    if (!std::isfinite(fl) || !std::isfinite(fr)) {
      throw DomainError("integrand is not finite inside [" + std::to_string(a) + ", " +
                        std::to_string(b) + "]");
    }
    kronrod += kKronrodWeights[i] * (fl + fr);
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (fl + fr);
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss), depth};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b].
///
/// The panel with the largest error estimate is halved until the summed
/// estimate drops to `tol`. A panel at depth kMaxQuadratureDepth is never
/// split again; hitting that (or the panel budget) throws ConvergenceError
/// carrying the current best value.
template <typename F>
  requires std::invocable<const F&, double>
QuadratureResult integrate_adaptive(const F& f, double a, double b, double tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
    throw DomainError("integrate_adaptive: need finite a <= b");
  }
  if (!(tol > 0.0)) throw DomainError("integrate_adaptive: tol must be positive");

  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_15(f, a, b, 0));
  std::size_t evaluations = 15;

  auto totals = [&panels] {
    // Re-sum from scratch so the running total never drifts.
    auto copy = panels;
    double value = 0.0;
    double error = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value, error};
  };

  double value = panels.top().value;
  double error = panels.top().error;
  std::size_t since_resum = 0;
  while (error > tol) {
    const detail::Panel worst = panels.top();
    if (worst.depth >= kMaxQuadratureDepth || panels.size() >= kMaxQuadratureIntervals) {
      auto [v, e] = totals();
      throw ConvergenceError("integrate_adaptive: no convergence on [" + std::to_string(a) +
                                 ", " + std::to_string(b) + "], error estimate " +
                                 std::to_string(e),
                             v);
    }
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const auto left = detail::gauss_kronrod_15(f, worst.a, mid, worst.depth + 1);
    const auto right = detail::gauss_kronrod_15(f, mid, worst.b, worst.depth + 1);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    if (++since_resum == 64 || error <= tol) {
      std::tie(value, error) = totals();
      since_resum = 0;
    }
  }
  return QuadratureResult{value, error, evaluations};
}

/// Integral over [a, inf) through the map x = a + s / (1 - s), s in [0, 1).
/// The Kronrod rule never samples s = 1, so the endpoint singularity of the
/// map is not evaluated; f must decay fast enough for the mapped integrand to
/// stay bounded.
template <typename F>
  requires std::invocable<const F&, double>
QuadratureResult integrate_to_infinity(const F& f, double a, double tol) {
  auto mapped = [&f, a](double s) {
    const double one_minus = 1.0 - s;
    const double x = a + s / one_minus;
    const double fx = f(x);
    return fx == 0.0 ? 0.0 : fx / (one_minus * one_minus);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, tol);
}

/// Bisection for the root of a monotonically increasing g on [lo, hi].
///
/// Stops once the bracket is narrower than `tol` (absolute, on the argument)
/// or cannot be halved further in double precision; tol = 0 asks for the
/// latter. Throws BracketingError when g(lo) and g(hi) share a strict sign.
template <typename G>
  requires std::invocable<const G&, double>
double find_root_increasing(const G& g, double lo, double hi, double tol) {
  if (!(lo <= hi)) throw DomainError("find_root_increasing: need lo <= hi");
  if (!(tol >= 0.0)) throw DomainError("find_root_increasing: tol must be >= 0");
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;
  if (g_lo > 0.0 || g_hi < 0.0) {
    throw BracketingError("find_root_increasing: g(lo) = " + std::to_string(g_lo) +
                          " and g(hi) = " + std::to_string(g_hi) +
                          " do not bracket a root of an increasing function");
  }
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    (g_mid < 0.0 ? lo : hi) = mid;
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace dissdwell::special
