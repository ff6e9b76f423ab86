#include "sphlap2/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "sphlap2/error.hpp"

namespace sphlap2::svg {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMargin = 60.0;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void require_finite(std::span<const double> values) {
  if (!std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::NonFiniteArgument, "plot data must be finite");
  }
}

void write_file(const std::filesystem::path& path, const std::string& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << doc;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace

std::string lineplot(const std::vector<LineSeries>& series, const PlotLabels& labels) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) {
      throw Error(ErrorCode::LengthMismatch, "series '" + s.label + "' has unequal x/y lengths");
    }
    require_finite(s.x);
    require_finite(s.y);
    for (double v : s.x) xmin = std::min(xmin, v), xmax = std::max(xmax, v);
    for (double v : s.y) ymin = std::min(ymin, v), ymax = std::max(ymax, v);
  }
  if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymin -= 0.5, ymax += 0.5;

  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  auto px = [&](double x) { return kMargin + (x - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double y) { return kHeight - kMargin - (y - ymin) / (ymax - ymin) * plot_h; };

  std::ostringstream doc;
  doc.precision(6);
  doc << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  doc << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  // axes
  doc << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin
      << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  doc << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
      << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  if (ymin < 0.0 && ymax > 0.0) {
    doc << "<line x1=\"" << kMargin << "\" y1=\"" << py(0.0) << "\" x2=\"" << kWidth - kMargin
        << "\" y2=\"" << py(0.0) << "\" stroke=\"#999\" stroke-dasharray=\"2,3\"/>\n";
  }
  doc << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16 << "\" font-size=\"11\">" << xmin
      << "</text>\n";
  doc << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16
      << "\" font-size=\"11\" text-anchor=\"end\">" << xmax << "</text>\n";
  doc << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin
      << "\" font-size=\"11\" text-anchor=\"end\">" << ymin << "</text>\n";
  doc << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 4
      << "\" font-size=\"11\" text-anchor=\"end\">" << ymax << "</text>\n";
  if (!labels.title.empty()) {
    doc << "<text x=\"" << kWidth / 2 << "\" y=\"" << kMargin / 2
        << "\" font-size=\"14\" text-anchor=\"middle\">" << escape(labels.title) << "</text>\n";
  }
  if (!labels.x_axis.empty()) {
    doc << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 16
        << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(labels.x_axis) << "</text>\n";
  }
  if (!labels.y_axis.empty()) {
    doc << "<text x=\"16\" y=\"" << kHeight / 2 << "\" font-size=\"12\" text-anchor=\"middle\" "
        << "transform=\"rotate(-90 16 " << kHeight / 2 << ")\">" << escape(labels.y_axis) << "</text>\n";
  }

  int legend_row = 0;
  for (const auto& s : series) {
    doc << "<polyline fill=\"none\" stroke=\"" << escape(s.color) << "\" stroke-width=\"1.5\"";
    if (s.dashed) doc << " stroke-dasharray=\"6,4\"";
    doc << " points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      doc << (i ? " " : "") << px(s.x[i]) << ',' << py(s.y[i]);
    }
    doc << "\"/>\n";
    if (!s.label.empty()) {
      doc << "<text x=\"" << kWidth - kMargin - 4 << "\" y=\"" << kMargin + 14 * (legend_row + 1)
          << "\" font-size=\"11\" text-anchor=\"end\" fill=\"" << escape(s.color) << "\">"
          << escape(s.label) << "</text>\n";
      ++legend_row;
    }
  }
  doc << "</svg>\n";
  return doc.str();
}

std::string heatmap(std::span<const double> values, int rows, int cols) {
  if (rows < 0 || cols < 0 || values.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error(ErrorCode::LengthMismatch, "heatmap needs rows * cols values");
  }
  require_finite(values);
  double lo = 0.0;
  double hi = 0.0;
  if (!values.empty()) {
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    lo = *mn;
    hi = *mx;
  }
  std::ostringstream doc;
  doc << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols << "\" height=\"" << rows
      << "\" viewBox=\"0 0 " << cols << ' ' << rows << "\" shape-rendering=\"crispEdges\">\n";
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double v = values[static_cast<std::size_t>(i) * cols + j];
      const int level = hi > lo ? static_cast<int>(std::lround(255.0 * (v - lo) / (hi - lo))) : 128;
      doc << "<rect x=\"" << j << "\" y=\"" << i << "\" width=\"1\" height=\"1\" fill=\"rgb(" << level
          << ',' << level << ',' << level << ")\"/>\n";
    }
  }
  doc << "</svg>\n";
  return doc.str();
}

void emit_svg_lineplot(const std::vector<LineSeries>& series, const std::filesystem::path& path,
                       const PlotLabels& labels) {
  write_file(path, lineplot(series, labels));
}

void emit_svg_heatmap(std::span<const double> values, int rows, int cols,
                      const std::filesystem::path& path) {
  write_file(path, heatmap(values, rows, cols));
}

}  // namespace sphlap2::svg
