#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sphlap2/matrix.hpp"
#include "sphlap2/simulate.hpp"

namespace sphlap2::io {

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

double parse_double(std::string_view text);

/// Point-set CSV with header x1[,x2[,x3]][,w][,value]. Columns are matched
/// by name; coordinates must be x1..xd without gaps.
PointSet read_points_csv(const std::filesystem::path& path);
PointSet parse_points_csv(std::istream& in);
void write_points_csv(std::ostream& out, const PointSet& points);

/// Target locations: header x1[,x2[,x3]], one location per line.
Eigen::MatrixXd read_targets_csv(const std::filesystem::path& path);
Eigen::MatrixXd parse_targets_csv(std::istream& in);

/// Grid CSV without header: one line per lattice row. A single line is a
/// one-dimensional field; otherwise the grid must be square.
LatticeField read_grid_csv(const std::filesystem::path& path, double spacing = 1.0);
LatticeField parse_grid_csv(std::istream& in, double spacing = 1.0);
void write_grid_csv(std::ostream& out, const LatticeField& field);

/// Row-major dense matrix, one row per line, no header.
void write_dense_csv(std::ostream& out, const PrecisionMatrix& q);
/// Header i,j,q then one 0-based triplet per nonzero entry (both triangles).
void write_triplets_csv(std::ostream& out, const PrecisionMatrix& q);

/// Splits a comma-separated line into trimmed fields.
std::vector<std::string> split_fields(std::string_view line);

}  // namespace sphlap2::io
