#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <doctest.h>

#include "dissdwell/special.hpp"
#include "oracles.hpp"

namespace sp = dissdwell::special;
using dissdwell::BracketingError;
using dissdwell::ConvergenceError;
using dissdwell::DomainError;

TEST_CASE("erf: reference values") {
  CHECK(sp::erf(0.0) == 0.0);
  // 30-digit values of erf(1), erf(2).
  CHECK(sp::erf(1.0) == doctest::Approx(0.842700792949714869341).epsilon(1e-15));
  CHECK(sp::erf(2.0) == doctest::Approx(0.995322265018952734162).epsilon(1e-15));
  CHECK(sp::erf(30.0) == 1.0);
  CHECK(sp::erf(-30.0) == -1.0);
}

TEST_CASE("erf: rejects non-finite input") {
  CHECK_THROWS_AS(sp::erf(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(sp::erf(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(sp::erfc(-std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("erf: matches the 50-digit series on both sides of the crossover") {
  for (double x : {1e-8, 0.1, 0.5, 1.0, 2.0, 2.4999, 2.5, 2.5001, 3.0, 4.5, 6.0}) {
    const double expected = oracle::erf(x);
    CHECK(std::abs(sp::erf(x) - expected) <= 1e-12 * std::abs(expected));
  }
}

TEST_CASE("erfc: tail accuracy") {
  // erfc(5) and erfc(10) from a 30-digit reference.
  CHECK(sp::erfc(5.0) == doctest::Approx(1.53745979442803485018834e-12).epsilon(1e-12));
  CHECK(sp::erfc(10.0) == doctest::Approx(2.08848758376254475700078e-45).epsilon(1e-12));
  CHECK(sp::erfc(-1.0) == doctest::Approx(2.0 - oracle::erfc(1.0)).epsilon(1e-14));
  CHECK(sp::erfc(1.5) == doctest::Approx(oracle::erfc(1.5)).epsilon(1e-13));
}

TEST_CASE("erf: odd and monotone on random samples") {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> dist(-8.0, 8.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = dist(rng);
    CHECK(sp::erf(-x) == -sp::erf(x));
    CHECK(std::abs(sp::erf(x)) <= 1.0);
  }
  double previous = sp::erf(-6.0);
  for (int i = 1; i <= 4000; ++i) {
    const double x = -6.0 + 12.0 * i / 4000.0;
    const double value = sp::erf(x);
    CHECK(value >= previous);
    previous = value;
  }
}

TEST_CASE("integrate_adaptive: constant and by-parts kernel") {
  const auto one = sp::integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.evaluations >= 1);
  CHECK(one.error_estimate >= 0.0);

  const double tol = 1e-12;
  const auto kernel =
      sp::integrate_adaptive([](double y) { return std::exp(-y * y) / (y * y); }, 1.0, 2.0, tol);
  CHECK(std::abs(kernel.value - oracle::kernel_by_parts(2.0)) <= tol);
  CHECK(kernel.value == doctest::Approx(0.088210).epsilon(1e-4));
  CHECK(kernel.error_estimate <= tol);
}

TEST_CASE("integrate_to_infinity: Gaussian half line") {
  const auto r = sp::integrate_to_infinity([](double y) { return std::exp(-y * y); }, 0.0, 1e-12);
  CHECK(r.value == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("integrate_adaptive: empty interval and argument checks") {
  const auto r = sp::integrate_adaptive([](double x) { return x; }, 2.0, 2.0, 1e-10);
  CHECK(r.value == 0.0);
  CHECK(r.evaluations >= 1);
  CHECK_THROWS_AS(sp::integrate_adaptive([](double x) { return x; }, 1.0, 0.0, 1e-10), DomainError);
  CHECK_THROWS_AS(sp::integrate_adaptive([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(
      sp::integrate_adaptive([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, 1e-10), DomainError);
}

TEST_CASE("integrate_adaptive: depth limit reports the best estimate") {
  // The panel touching the 1/sqrt(x) singularity never gets below ~1e-9.
  auto singular = [](double x) { return 1.0 / std::sqrt(x); };
  try {
    sp::integrate_adaptive(singular, 0.0, 1.0, 1e-30);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_estimate() == doctest::Approx(2.0).epsilon(1e-7));
  }
}

TEST_CASE("integrate_adaptive: additive over random splits") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto f = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x) + 0.25 * x * x; };
  const double tol = 1e-11;
  for (int i = 0; i < 200; ++i) {
    const double a = -3.0 + 2.0 * unit(rng);
    const double c = a + 0.1 + 5.0 * unit(rng);
    const double b = a + (c - a) * unit(rng);
    const double whole = sp::integrate_adaptive(f, a, c, tol).value;
    const double parts = sp::integrate_adaptive(f, a, b, tol).value + sp::integrate_adaptive(f, b, c, tol).value;
    CHECK(std::abs(whole - parts) <= 2.0 * tol);
  }
}

TEST_CASE("find_root_increasing: examples") {
  CHECK(sp::find_root_increasing([](double t) { return t - 1.0; }, 0.0, 2.0, 1e-14) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(sp::find_root_increasing([](double t) { return t * t - 2.0; }, 0.0, 2.0, 1e-13) ==
        doctest::Approx(1.4142136).epsilon(1e-7));
  CHECK_THROWS_AS(sp::find_root_increasing([](double t) { return t + 1.0; }, 0.0, 2.0, 1e-12),
                  BracketingError);
  CHECK(sp::find_root_increasing([](double t) { return t; }, 0.0, 2.0, 1e-12) == 0.0);
}

TEST_CASE("find_root_increasing: monotone family with known roots") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(0.05, 9.5);
  for (int i = 0; i < 300; ++i) {
    const double root = dist(rng);
    const double slope = 0.1 + dist(rng);
    auto cubic = [=](double t) { return (t - root) * (slope + (t - root) * (t - root)); };
    auto expo = [=](double t) { return std::exp(slope * (t - root)) - 1.0; };
    const double tol = 1e-10;
    CHECK(std::abs(sp::find_root_increasing(cubic, 0.0, 10.0, tol) - root) <= tol);
    CHECK(std::abs(sp::find_root_increasing(expo, 0.0, 10.0, tol) - root) <= tol);
    CHECK(std::abs(sp::find_root_increasing(expo, 0.0, 10.0, 0.0) - root) <= 1e-14 * 10.0);
  }
}
