#include "dissdwell/output.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dissdwell/errors.hpp"

namespace dissdwell {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;
constexpr std::array<const char*, 4> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string optional_field(const std::optional<double>& v) {
  return v ? format_decimal(*v) : std::string();
}

std::string fixed(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double nice_step(double range) {
  const double raw = range / 5.0;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double scaled = raw / magnitude;
  if (scaled < 1.5) return magnitude;
  if (scaled < 3.5) return 2.0 * magnitude;
  if (scaled < 7.5) return 5.0 * magnitude;
  return 10.0 * magnitude;
}

std::string tick_label(double v, double step) {
  const int decimals = std::max(0, -static_cast<int>(std::floor(std::log10(step))));
  return fixed(std::abs(v) < 1e-12 * step ? 0.0 : v, decimals);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

template <typename Row>
void require_rows(std::span<const Row> rows) {
  if (rows.empty()) throw ValidationError("rows", "nothing to write: no rows");
}

}  // namespace

std::string format_decimal(double value) {
  if (value == 0.0) return "0";
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
  const int decimals = std::max(0, 11 - exponent);
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_decimal(r.u) << ',' << format_decimal(r.zeta) << ','
        << format_decimal(r.F_rederived) << ',' << format_decimal(r.F_paper) << ','
        << format_decimal(r.tau_closed_full) << ',' << format_decimal(r.tau_closed_approx) << ','
        << optional_field(r.tau_numeric) << ',' << optional_field(r.tau_classical_exact) << ','
        << optional_field(r.tau_classical_quadratic) << '\n';
  }
}

void write_classical_csv(std::span<const ClassicalRow> rows, std::ostream& out) {
  out << "w_cl,tau_classical_exact,tau_classical_quadratic\n";
  for (const auto& r : rows) {
    out << format_decimal(r.w_cl) << ',' << format_decimal(r.tau_exact) << ','
        << format_decimal(r.tau_quadratic) << '\n';
  }
}

void write_evolve_csv(std::span<const EvolveRow> rows, std::ostream& out) {
  out << "t,q,density,current_canonical,current_paper\n";
  for (const auto& r : rows) {
    out << format_decimal(r.t) << ',' << format_decimal(r.q) << ',' << format_decimal(r.density)
        << ',' << format_decimal(r.current_canonical) << ',' << format_decimal(r.current_paper)
        << '\n';
  }
}

void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path& path) {
  require_rows(rows);
  auto out = open_for_write(path);
  write_sweep_csv(rows, out);
  finish(out, path);
}

std::string render_svg(std::span<const PlotSeries> series, std::string_view title,
                       std::string_view x_label, std::string_view y_label) {
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
  for (const auto& s : series) {
    for (double x : s.x) x_lo = std::min(x_lo, x), x_hi = std::max(x_hi, x);
    for (double y : s.y) y_lo = std::min(y_lo, y), y_hi = std::max(y_hi, y);
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
  if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" << xml_escape(title) << "</text>\n";

  // Axes.
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\"/>\n</g>\n";

  // Ticks.
  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  const double x_step = nice_step(x_hi - x_lo);
  for (double x = std::ceil(x_lo / x_step) * x_step; x <= x_hi + 1e-9 * x_step; x += x_step) {
    svg << "<line x1=\"" << fixed(px(x)) << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << fixed(px(x))
        << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"black\"/>"
        << "<text x=\"" << fixed(px(x)) << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\">" << tick_label(x, x_step) << "</text>\n";
  }
  const double y_step = nice_step(y_hi - y_lo);
  for (double y = std::ceil(y_lo / y_step) * y_step; y <= y_hi + 1e-9 * y_step; y += y_step) {
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fixed(py(y)) << "\" x2=\"" << kLeft
        << "\" y2=\"" << fixed(py(y)) << "\" stroke=\"black\"/>"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << fixed(py(y) + 4)
        << "\" text-anchor=\"end\">" << tick_label(y, y_step) << "</text>\n";
  }
  svg << "</g>\n";

  // Axis labels.
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << xml_escape(x_label) << "</text>\n"
      << "<text x=\"20\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 20 "
      << kTop + plot_h / 2 << ")\">" << xml_escape(y_label) << "</text>\n";

  // Data.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kColors[i % kColors.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      svg << (j ? " " : "") << fixed(px(s.x[j])) << ',' << fixed(py(s.y[j]));
    }
    svg << "\"><title>" << xml_escape(s.name) << "</title></polyline>\n";
    svg << "<text x=\"" << kLeft + 12 << "\" y=\"" << kTop + 16 + 16 * i
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
        << xml_escape(s.name) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(std::span<const SweepRow> rows, const std::filesystem::path& path, PlotKind which) {
  require_rows(rows);
  std::vector<PlotSeries> series;
  std::string title;
  std::string y_label;
  if (which == PlotKind::dwell_vs_width) {
    PlotSeries s{"tau_closed_full", {}, {}};
    for (const auto& r : rows) {
      s.x.push_back(r.u);
      s.y.push_back(r.tau_closed_full);
    }
    series.push_back(std::move(s));
    title = "Dwell time vs scaled barrier width";
    y_label = "dwell time";
  } else {
    PlotSeries exact{"tau_classical_exact", {}, {}};
    PlotSeries quadratic{"tau_classical_quadratic", {}, {}};
    for (const auto& r : rows) {
      if (!r.tau_classical_quadratic) {
        throw ValidationError("tau_classical_quadratic", "column missing from sweep rows");
      }
      if (r.tau_classical_exact) {
        exact.x.push_back(r.u);
        exact.y.push_back(*r.tau_classical_exact);
      }
      quadratic.x.push_back(r.u);
      quadratic.y.push_back(*r.tau_classical_quadratic);
    }
    if (exact.x.empty()) {
      throw ValidationError("tau_classical_exact", "column missing from sweep rows");
    }
    series.push_back(std::move(exact));
    series.push_back(std::move(quadratic));
    title = "Classical traversal time with friction";
    y_label = "traversal time";
  }
  auto out = open_for_write(path);
  out << render_svg(series, title, which == PlotKind::dwell_vs_width ? "w / sigma" : "w_cl", y_label);
  finish(out, path);
}

void emit_plot(std::span<const ClassicalRow> rows, const std::filesystem::path& path) {
  require_rows(rows);
  PlotSeries exact{"tau_classical_exact", {}, {}};
  PlotSeries quadratic{"tau_classical_quadratic", {}, {}};
  for (const auto& r : rows) {
    exact.x.push_back(r.w_cl);
    exact.y.push_back(r.tau_exact);
    quadratic.x.push_back(r.w_cl);
    quadratic.y.push_back(r.tau_quadratic);
  }
  const std::array<PlotSeries, 2> series{std::move(exact), std::move(quadratic)};
  auto out = open_for_write(path);
  out << render_svg(series, "Classical traversal time with friction", "w_cl", "traversal time");
  finish(out, path);
}

}  // namespace dissdwell
