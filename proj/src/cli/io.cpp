#include "sphlap2/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "sphlap2/error.hpp"

namespace sphlap2::io {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }
  return in;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool blank(const std::string& line) { return trim(line).empty(); }

// Reads data lines after the header, each with exactly `width` numbers.
std::vector<std::vector<double>> read_rows(std::istream& in, std::size_t width) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto fields = split_fields(line);
    if (fields.size() != width) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(width) + " fields, got " +
                                             std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(width);
    for (const auto& f : fields) row.push_back(parse_double(f));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct CoordinateHeader {
  int dimension = 0;
  std::vector<int> coord_cols;
  std::optional<int> weight_col;
  std::optional<int> value_col;
  std::size_t width = 0;
};

CoordinateHeader parse_header(std::istream& in, bool allow_extras) {
  std::string line;
  while (std::getline(in, line) && blank(line)) {
  }
  if (blank(line)) {
    throw Error(ErrorCode::ParseError, "missing CSV header");
  }
  const auto names = split_fields(line);
  CoordinateHeader h;
  h.width = names.size();
  std::vector<std::optional<int>> coords(3);
  for (std::size_t c = 0; c < names.size(); ++c) {
    const auto& name = names[c];
    const int col = static_cast<int>(c);
    if (name == "x1" || name == "x2" || name == "x3") {
      coords[static_cast<std::size_t>(name[1] - '1')] = col;
    } else if (allow_extras && name == "w") {
      h.weight_col = col;
    } else if (allow_extras && name == "value") {
      h.value_col = col;
    } else {
      throw Error(ErrorCode::ParseError, "unexpected column '" + name + "'");
    }
  }
  for (const auto& c : coords) {
    if (!c) break;
    h.coord_cols.push_back(*c);
  }
  h.dimension = static_cast<int>(h.coord_cols.size());
  const auto present = std::count_if(coords.begin(), coords.end(), [](auto& c) { return c.has_value(); });
  if (h.dimension == 0 || present != h.dimension) {
    throw Error(ErrorCode::ParseError, "coordinate columns must be x1..xd without gaps");
  }
  return h;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return {buf, res.ptr};
}

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

PointSet parse_points_csv(std::istream& in) {
  const CoordinateHeader h = parse_header(in, true);
  const auto rows = read_rows(in, h.width);
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd pos(n, h.dimension);
  Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
  std::optional<Eigen::VectorXd> values;
  if (h.value_col) values = Eigen::VectorXd(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    for (int c = 0; c < h.dimension; ++c) pos(i, c) = row[static_cast<std::size_t>(h.coord_cols[c])];
    if (h.weight_col) w[i] = row[static_cast<std::size_t>(*h.weight_col)];
    if (values) (*values)[i] = row[static_cast<std::size_t>(*h.value_col)];
  }
  return {std::move(pos), std::move(w), std::move(values)};
}

PointSet read_points_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_points_csv(in);
}

void write_points_csv(std::ostream& out, const PointSet& points) {
  for (int c = 0; c < points.dimension(); ++c) out << (c ? "," : "") << 'x' << c + 1;
  out << ",w";
  if (points.has_values()) out << ",value";
  out << '\n';
  for (Eigen::Index i = 0; i < points.size(); ++i) {
    for (int c = 0; c < points.dimension(); ++c) {
      out << (c ? "," : "") << format_double(points.positions()(i, c));
    }
    out << ',' << format_double(points.weights()[i]);
    if (points.has_values()) out << ',' << format_double((*points.values())[i]);
    out << '\n';
  }
}

Eigen::MatrixXd parse_targets_csv(std::istream& in) {
  const CoordinateHeader h = parse_header(in, false);
  const auto rows = read_rows(in, h.width);
  Eigen::MatrixXd targets(static_cast<Eigen::Index>(rows.size()), h.dimension);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int c = 0; c < h.dimension; ++c) {
      targets(static_cast<Eigen::Index>(i), c) = rows[i][static_cast<std::size_t>(h.coord_cols[c])];
    }
  }
  return targets;
}

Eigen::MatrixXd read_targets_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_targets_csv(in);
}

LatticeField parse_grid_csv(std::istream& in, double spacing) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    std::vector<double> row;
    for (const auto& f : split_fields(line)) row.push_back(parse_double(f));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::ParseError, "grid rows have unequal length");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty grid");
  LatticeField field;
  field.spacing = spacing;
  field.side = static_cast<int>(rows.front().size());
  if (rows.size() == 1) {
    field.dimension = 1;
  } else {
    if (rows.size() != rows.front().size()) {
      throw Error(ErrorCode::ParseError, "two-dimensional grid must be square");
    }
    field.dimension = 2;
  }
  for (auto& row : rows) field.values.insert(field.values.end(), row.begin(), row.end());
  return field;
}

LatticeField read_grid_csv(const std::filesystem::path& path, double spacing) {
  auto in = open_input(path);
  return parse_grid_csv(in, spacing);
}

void write_grid_csv(std::ostream& out, const LatticeField& field) {
  for (int i = 0; i < field.rows(); ++i) {
    for (int j = 0; j < field.columns(); ++j) {
      out << (j ? "," : "") << format_double(field.at(i, j));
    }
    out << '\n';
  }
}

void write_dense_csv(std::ostream& out, const PrecisionMatrix& q) {
  const Eigen::MatrixXd dense = q.to_dense();
  for (Eigen::Index i = 0; i < dense.rows(); ++i) {
    for (Eigen::Index j = 0; j < dense.cols(); ++j) {
      out << (j ? "," : "") << format_double(dense(i, j));
    }
    out << '\n';
  }
}

void write_triplets_csv(std::ostream& out, const PrecisionMatrix& q) {
  auto entries = q.triplets();
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.row() != b.row() ? a.row() < b.row() : a.col() < b.col();
  });
  out << "i,j,q\n";
  for (const auto& t : entries) {
    out << t.row() << ',' << t.col() << ',' << format_double(t.value()) << '\n';
  }
}

}  // namespace sphlap2::io
