#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sphlap2/precision.hpp"

namespace sphlap2 {

/// Field values on a periodic L^d lattice, d in {1, 2}.
struct LatticeField {
  int dimension = 2;
  int side = 0;
  double spacing = 1.0;
  /// Row-major: value at (row i, column j) is values[i * side + j]. For d = 1
  /// the field is a single row.
  std::vector<double> values;
  std::uint64_t seed = 0;
  /// Largest |imaginary part| left by the inverse FFT before it was dropped.
  double imag_residue = 0.0;

  [[nodiscard]] int rows() const noexcept { return dimension == 1 ? 1 : side; }
  [[nodiscard]] int columns() const noexcept { return side; }
  [[nodiscard]] double at(int row, int col) const { return values[static_cast<std::size_t>(row) * side + col]; }
};

/// Integer wavevector component for FFT storage index idx on a side of L:
/// idx for idx < L/2, idx - L otherwise, i.e. m in {-L/2, ..., L/2 - 1}.
constexpr int wave_index(int idx, int side) noexcept { return idx < side / 2 ? idx : idx - side; }

/// S(k_m) = 1 / Qtilde*(|k_m|) for k_m = 2 pi m / (L spacing), in FFT storage
/// order (row-major for d = 2). Throws OddLatticeSize for odd L and
/// UnsupportedDimension for d = 3.
std::vector<double> lattice_spectrum(const PrecisionFunction& pf, int side, double spacing = 1.0);

/// C_lat(r) = (L spacing)^-d sum_m S(k_m) exp(i k_m . r) at the lattice
/// displacement lag * spacing; lag has one integer entry per dimension.
double lattice_covariance(std::span<const double> spectrum, int dimension, int side,
                          double spacing, std::span<const int> lag);

/// One periodic realization with spectrum S(k_m).
///
/// Amplitudes A_m are complex Gaussian with E|A_m|^2 = S(k_m) / (L spacing)^d
/// and A_{-m} = conj(A_m); self-conjugate modes (every component 0 or -L/2)
/// get a real draw. The field is sum_m A_m exp(i k_m . s), whose
/// autocovariance is exactly lattice_covariance(). The normal stream is
/// NormalGenerator(seed), consumed in storage order.
///
/// Note that for h > 0 the continuum model is not stationary; the torus
/// synthesis nevertheless treats 1/Qtilde* as a spectral density.
LatticeField simulate(const PrecisionFunction& pf, int side, double spacing, std::uint64_t seed);

}  // namespace sphlap2
