#pragma once

// Minimal SVG line charts for the per-pair artifacts.

#include <filesystem>
#include <string>
#include <vector>

#include "bladewatch/monitor.hpp"

namespace bladewatch::pipeline {
struct PredictionTable;
}

namespace bladewatch::plot {

struct Series {
  std::string label;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
  /// Draw a circle at every point instead of a line.
  bool markers = false;
  /// Horizontal segments from x[2k] to x[2k + 1] at height y[2k].
  bool segments = false;
  double stroke_width = 1.2;
};

struct Figure {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  double width = 960;
  double height = 380;
};

std::string render_svg(const Figure& figure);

/// Means of y over `bins` equal-width x bins; empty bins are skipped.
Series decimate(const Series& series, std::size_t bins);

/// Writes predictions_<pair>.svg, residuals_<pair>.svg and chart_<pair>.svg.
/// Throws DataError when the directory is not writable.
void emit_pair_plots(const std::filesystem::path& dir, const pipeline::PredictionTable& table,
                     const std::vector<monitor::WindowResult>& windows);

}  // namespace bladewatch::plot
