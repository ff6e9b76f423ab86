#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace sphlap2::svg {

struct LineSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

struct PlotLabels {
  std::string title;
  std::string x_axis;
  std::string y_axis;
};

/// Standalone SVG with one <polyline> per series, axes and a legend.
std::string lineplot(const std::vector<LineSeries>& series, const PlotLabels& labels = {});

/// rows x cols grid (row-major) as one <rect> per cell, grayscale with the
/// largest value lightest. A constant grid renders uniform mid-gray.
std::string heatmap(std::span<const double> values, int rows, int cols);

/// Write the documents above; throw IoError on failure.
void emit_svg_lineplot(const std::vector<LineSeries>& series, const std::filesystem::path& path,
                       const PlotLabels& labels = {});
void emit_svg_heatmap(std::span<const double> values, int rows, int cols,
                      const std::filesystem::path& path);

}  // namespace sphlap2::svg
