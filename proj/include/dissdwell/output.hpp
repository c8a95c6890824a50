#pragma once

// CSV, SVG and JSON writers for the CLI.

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dissdwell/dwelltime.hpp"
#include "dissdwell/sweep.hpp"

namespace dissdwell {

inline constexpr std::string_view kSweepCsvHeader =
    "u,zeta,F_rederived,F_paper,tau_closed_full,tau_closed_approx,tau_numeric,"
    "tau_classical_exact,tau_classical_quadratic";

/// Plain decimal notation with 12 significant digits ("0" for zero).
std::string format_decimal(double value);

/// Header line plus one line per row; absent optionals are empty fields.
void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);
void write_classical_csv(std::span<const ClassicalRow> rows, std::ostream& out);
void write_evolve_csv(std::span<const EvolveRow> rows, std::ostream& out);

/// write_sweep_csv into a file. Empty rows throw ValidationError("rows");
/// file failures throw IoError.
void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path& path);

enum class PlotKind { dwell_vs_width, classical_vs_width };

/// One polyline per series over x = u. dwell_vs_width plots tau_closed_full;
/// classical_vs_width plots the exact and the quadratic traversal times; the
/// quadratic column must be present in every row and the exact one in at
/// least one.
void emit_plot(std::span<const SweepRow> rows, const std::filesystem::path& path, PlotKind which);
void emit_plot(std::span<const ClassicalRow> rows, const std::filesystem::path& path);

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Standalone SVG line chart with labeled axes and tick marks.
std::string render_svg(std::span<const PlotSeries> series, std::string_view title,
                       std::string_view x_label, std::string_view y_label);

/// Pretty-printed JSON documents for the `dwell` and `report` subcommands.
std::string dwell_result_json(const DwellResult& result);
std::string consistency_report_json(const ConsistencyReport& report);

}  // namespace dissdwell
