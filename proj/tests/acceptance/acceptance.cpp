// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// fails. Usage: acceptance <path to dissdwell CLI> <scratch directory>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dissdwell/classical.hpp"
#include "dissdwell/dwelltime.hpp"
#include "dissdwell/langevin.hpp"
#include "dissdwell/special.hpp"
#include "dissdwell/sweep.hpp"
#include "dissdwell/wavepacket.hpp"
#include "oracles.hpp"

using namespace dissdwell;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PhysicalConfig config(double zeta = 2.0, double eta = 0.5, double omega0 = 1.0) {
  PhysicalConfig cfg;
  cfg.z0 = zeta * std::numbers::sqrt2 * cfg.sigma;
  cfg.eta = eta;
  cfg.omega0 = omega0;
  return cfg;
}

Outcome kernel_identity() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (double zeta : {1.0, 1.5, 2.0, 3.0, 5.0, 8.0}) {
    worst = std::max(worst, std::abs(dwell_bracket_full(zeta) - dwell_kernel(zeta)));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-10 && elapsed < 1.0,
          "max residual " + num(worst) + " (<= 1e-10), " + num(elapsed) + " s (< 1 s)"};
}

Outcome kernel_value() {
  const double k = dwell_kernel(2.0);
  const double oracle_value = oracle::kernel_by_parts(2.0);
  return {std::abs(k - 0.088210) <= 1e-5 && std::abs(k - oracle_value) <= 1e-12,
          "kernel(2) = " + std::to_string(k) + ", |k - 0.088210| = " + num(std::abs(k - 0.088210)) +
              " (<= 1e-5), |k - by-parts oracle| = " + num(std::abs(k - oracle_value))};
}

Outcome ode_residual() {
  double worst = 0.0;
  double worst_fd = 0.0;
  const double h = 1e-5;
  for (double eta : {0.0, 0.5, 1.0, 2.0}) {
    for (double omega0 : {0.5, 1.0, 2.0}) {
      const auto cfg = config(2.0, eta, omega0);
      const double w2 = omega0 * omega0;
      for (int i = 0; i <= 40; ++i) {
        const double t = 10.0 * i / 40.0;
        const auto c = coefficients(cfg, t);
        const double dd1 = oracle::a1_second_derivative(eta, omega0, t);
        const double dd2 = oracle::a2_second_derivative(eta, omega0, t);
        worst = std::max(worst, std::abs(dd1 + eta * c.da1 - w2 * c.a1) / std::max(1.0, std::abs(w2 * c.a1)));
        worst = std::max(worst, std::abs(dd2 + eta * c.da2 - w2 * c.a2) / std::max(1.0, std::abs(w2 * c.a2)));
        if (t >= h) {
          const auto lo = coefficients(cfg, t - h);
          const auto hi = coefficients(cfg, t + h);
          worst_fd = std::max(worst_fd, std::abs((hi.a1 - lo.a1) / (2 * h) - c.da1) / std::max(1.0, std::abs(c.da1)));
          worst_fd = std::max(worst_fd, std::abs((hi.a2 - lo.a2) / (2 * h) - c.da2) / std::max(1.0, std::abs(c.da2)));
        }
      }
    }
  }
  return {worst <= 1e-8 && worst_fd <= 1e-6,
          "max relative residual " + num(worst) + " (<= 1e-8), derivative cross-check " + num(worst_fd)};
}

Outcome continuity() {
  double worst_ratio = 0.0;
  for (double eta : {0.0, 1.0}) {
    const auto cfg = config(2.0, eta);
    const double h_t = 1e-4 / cfg.omega0;
    double max_drho = 0.0;
    double max_residual = 0.0;
    for (int i = 0; i < 21; ++i) {
      const double t = (0.1 + 1.9 * i / 20.0) / cfg.omega0;
      const auto s = packet_state(cfg, t);
      const double width = std::sqrt(s.sigma_theta_sq);
      const double h_q = width / 200.0;
      for (int j = 0; j < 21; ++j) {
        const double q = s.q_c + width * (-4.0 + 8.0 * j / 20.0);
        const double drho = (density(cfg, q, t + h_t) - density(cfg, q, t - h_t)) / (2.0 * h_t);
        const double dJ = (current_canonical(cfg, q + h_q, t) - current_canonical(cfg, q - h_q, t)) / (2.0 * h_q);
        max_drho = std::max(max_drho, std::abs(drho));
        max_residual = std::max(max_residual, std::abs(drho + dJ));
      }
    }
    worst_ratio = std::max(worst_ratio, max_residual / max_drho);
  }
  return {worst_ratio <= 1e-4, "max |d_t rho + d_q J| / max |d_t rho| = " + num(worst_ratio) + " (<= 1e-4)"};
}

Outcome normalization() {
  double worst = 0.0;
  for (double eta : {0.0, 0.5, 1.0}) {
    const auto cfg = config(2.0, eta);
    for (double t : {0.0, 0.5, 1.0, 2.0}) {
      const auto s = packet_state(cfg, t);
      const double w = std::sqrt(s.sigma_theta_sq);
      const double total = oracle::simpson([&](double q) { return density(cfg, q, t); },
                                           s.q_c - 12.0 * w, s.q_c + 12.0 * w, 4000);
      worst = std::max(worst, std::abs(total - 1.0));
    }
  }
  return {worst <= 1e-8, "max |int rho dq - 1| = " + num(worst) + " (<= 1e-8)"};
}

Outcome propagator_closure() {
  const auto start = Clock::now();
  const auto cfg = config(2.0, 0.0);
  double worst = 0.0;
  for (double t : {0.3, 0.7, 1.2}) {
    const auto fit = fit_propagated_packet(cfg, t);
    const auto s = packet_state(cfg, t);
    worst = std::max(worst, std::abs(fit.width_sq / s.sigma_theta_sq - 1.0));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-6 && elapsed < 30.0,
          "max relative width error " + num(worst) + " (<= 1e-6), " + num(elapsed) + " s (< 30 s)"};
}

Outcome pipeline_closure() {
  double worst = 0.0;
  for (double zeta : {1.5, 2.0, 3.0}) {
    for (double eta : {0.0, 0.5, 1.0}) {
      const auto cfg = config(zeta, eta);
      const double numeric = dwell_time_numeric(cfg, NumericMode::paper_literal);
      const double closed = dwell_time_closed(cfg, Convention::rederived).tau_closed_full;
      worst = std::max(worst, std::abs(numeric - closed) / closed);
    }
  }
  return {worst <= 1e-3, "max relative difference " + num(worst) + " (<= 1e-3)"};
}

Outcome no_saturation() {
  const auto rows = run_sweep(PhysicalConfig{}, SweepSpec{});
  bool increasing = rows.size() == 64;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    increasing = increasing && rows[i].tau_closed_full > rows[i - 1].tau_closed_full;
  }
  const double ratio = shape_F(20.0, Convention::rederived) / shape_F(10.0, Convention::rederived);
  return {increasing && std::abs(ratio - 4.0) <= 0.05,
          std::string("tau strictly increasing on 64 points: ") + (increasing ? "yes" : "no") +
              ", F(20)/F(10) = " + std::to_string(ratio) + " (4.00 +- 0.05)"};
}

Outcome classical() {
  const double quad = traversal_series(0.01, 0.1, 5.0);
  const double exact = traversal_exact({1.0, 10.0, 5.0});
  double worst = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double g_tau0 = 0.1 * i / 100.0;
    for (double v0 : {1.0, 10.0, 100.0}) {
      const double w = 1.0;
      const ClassicalSpec spec{g_tau0 * v0 / w, v0, w};
      worst = std::max(worst, std::abs(traversal_quadratic(spec) - traversal_exact(spec)) / traversal_exact(spec));
    }
  }
  const bool ok = quad == 0.75 && std::abs(exact - std::numbers::ln2) <= 1e-12 &&
                  worst <= 0.01;
  return {ok, "quadratic(0.01, 0.1, 5) = " + std::to_string(quad) + ", |exact - ln 2| = " +
                  num(std::abs(exact - std::numbers::ln2)) + ", max relative error for gamma tau0 <= 0.1 " +
                  num(worst) + " (<= 1e-2)"};
}

Outcome erf_accuracy() {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = -6.0 + 12.0 * (i + 0.5) / 1000.0;
    const double expected = oracle::erf(x);
    worst = std::max(worst, std::abs(special::erf(x) - expected) / std::abs(expected));
  }
  return {worst <= 1e-12, "max relative error " + num(worst) + " (<= 1e-12)"};
}

int run(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_determinism(const std::string& cli, const std::filesystem::path& work) {
  std::filesystem::create_directories(work);
  const auto a = work / "sweep_a.csv";
  const auto b = work / "sweep_b.csv";
  const std::string base = "\"" + cli + "\" ";
  const int rc_a = run(base + "--out \"" + a.string() + "\" sweep --classical");
  const int rc_b = run(base + "--out \"" + b.string() + "\" sweep --classical");
  const std::string text_a = slurp(a);
  const bool identical = rc_a == 0 && rc_b == 0 && !text_a.empty() && text_a == slurp(b);
  const int rc_regime = run(base + "sweep --u-min 2.5 > /dev/null 2>&1");
  return {identical && rc_regime == 2,
          std::string("byte-identical CSV: ") + (identical ? "yes" : "no") +
              ", exit code for u_min = 2.5: " + std::to_string(rc_regime) + " (expected 2)"};
}

Outcome report_prefactor() {
  std::vector<PhysicalConfig> grid;
  const SweepSpec spec;
  for (int i = 0; i < spec.steps; ++i) {
    PhysicalConfig cfg;
    const double u = spec.u_min + (spec.u_max - spec.u_min) * i / (spec.steps - 1);
    cfg.z0 = 0.5 * u * cfg.sigma;
    grid.push_back(cfg);
  }
  const auto report = consistency_report(grid);
  double worst = 0.0;
  for (const auto& row : report.rows) {
    worst = std::max(worst, std::abs(row.prefactor_ratio_linear_zeta - 1.0 / row.zeta));
  }
  return {report.rows.size() == grid.size() && worst <= 1e-12,
          "max |ratio - 1/zeta| over " + std::to_string(report.rows.size()) + " points = " + num(worst) +
              " (<= 1e-12)"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli> <work dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path work = argv[2];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 kernel identity", kernel_identity},
      {"2 kernel value at zeta = 2", kernel_value},
      {"3 Langevin coefficient ODE residual", ode_residual},
      {"4 continuity equation", continuity},
      {"5 normalization", normalization},
      {"6 undamped propagator closure", propagator_closure},
      {"7 numeric vs closed-form dwell time", pipeline_closure},
      {"8 no saturation with barrier width", no_saturation},
      {"9 classical comparator", classical},
      {"10 erf accuracy", erf_accuracy},
      {"11 CLI determinism and regime exit code", [&] { return cli_determinism(cli, work); }},
      {"12 consistency report prefactor ratio", report_prefactor},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << ": " << outcome.detail << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
