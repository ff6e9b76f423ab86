#include "sphlap2/simulate.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <string>

#include "sphlap2/error.hpp"
#include "sphlap2/rng.hpp"

namespace sphlap2 {

namespace {

void require_lattice(int dimension, int side) {
  if (dimension < 1 || dimension > 2) {
    throw Error(ErrorCode::UnsupportedDimension,
                "lattice simulation supports d = 1, 2, got " + std::to_string(dimension));
  }
  if (side < 2 || side % 2 != 0) {
    throw Error(ErrorCode::OddLatticeSize,
                "lattice side must be even and >= 2, got " + std::to_string(side));
  }
}

std::size_t node_count(int dimension, int side) {
  return dimension == 1 ? static_cast<std::size_t>(side)
                        : static_cast<std::size_t>(side) * static_cast<std::size_t>(side);
}

// Storage index of -m.
std::size_t partner_index(std::size_t idx, int dimension, int side) {
  const auto L = static_cast<std::size_t>(side);
  auto neg = [L](std::size_t i) { return (L - i) % L; };
  if (dimension == 1) return neg(idx);
  return neg(idx / L) * L + neg(idx % L);
}

// FFTW's planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class BackwardPlan {
 public:
  BackwardPlan(int dimension, int side, std::vector<std::complex<double>>& data) {
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    std::lock_guard lock(planner_mutex());
    plan_ = dimension == 1
                ? fftw_plan_dft_1d(side, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE)
                : fftw_plan_dft_2d(side, side, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~BackwardPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  BackwardPlan(const BackwardPlan&) = delete;
  BackwardPlan& operator=(const BackwardPlan&) = delete;

  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

}  // namespace

std::vector<double> lattice_spectrum(const PrecisionFunction& pf, int side, double spacing) {
  const int d = pf.dimension();
  require_lattice(d, side);
  const double dk = 2.0 * std::numbers::pi / (side * spacing);
  std::vector<double> spectrum(node_count(d, side));
  if (d == 1) {
    for (int i = 0; i < side; ++i) {
      spectrum[static_cast<std::size_t>(i)] = 1.0 / pf.spectral(std::abs(wave_index(i, side) * dk));
    }
    return spectrum;
  }
  for (int iy = 0; iy < side; ++iy) {
    const double ky = wave_index(iy, side) * dk;
    for (int ix = 0; ix < side; ++ix) {
      const double kx = wave_index(ix, side) * dk;
      spectrum[static_cast<std::size_t>(iy) * side + ix] = 1.0 / pf.spectral(std::hypot(kx, ky));
    }
  }
  return spectrum;
}

double lattice_covariance(std::span<const double> spectrum, int dimension, int side,
                          double spacing, std::span<const int> lag) {
  require_lattice(dimension, side);
  if (spectrum.size() != node_count(dimension, side)) {
    throw Error(ErrorCode::LengthMismatch, "spectrum size does not match the lattice");
  }
  if (lag.size() != static_cast<std::size_t>(dimension)) {
    throw Error(ErrorCode::DimensionMismatch, "lag needs one component per dimension");
  }
  const double phase = 2.0 * std::numbers::pi / side;
  const double volume = std::pow(side * spacing, dimension);
  double sum = 0.0;
  if (dimension == 1) {
    for (int i = 0; i < side; ++i) {
      sum += spectrum[static_cast<std::size_t>(i)] * std::cos(phase * wave_index(i, side) * lag[0]);
    }
    return sum / volume;
  }
  // Storage is (row = y, column = x); lag is (x, y).
  for (int iy = 0; iy < side; ++iy) {
    for (int ix = 0; ix < side; ++ix) {
      const double arg = phase * (wave_index(ix, side) * lag[0] + wave_index(iy, side) * lag[1]);
      sum += spectrum[static_cast<std::size_t>(iy) * side + ix] * std::cos(arg);
    }
  }
  return sum / volume;
}

LatticeField simulate(const PrecisionFunction& pf, int side, double spacing, std::uint64_t seed) {
  const int d = pf.dimension();
  const std::vector<double> spectrum = lattice_spectrum(pf, side, spacing);
  const std::size_t n = spectrum.size();
  const double volume = std::pow(side * spacing, d);

  std::vector<std::complex<double>> amplitudes(n);
  BackwardPlan plan(d, side, amplitudes);

  NormalGenerator normal(seed);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t partner = partner_index(idx, d, side);
    if (partner == idx) {
      amplitudes[idx] = std::sqrt(spectrum[idx] / volume) * normal();
    } else if (idx < partner) {
      const double scale = std::sqrt(spectrum[idx] / (2.0 * volume));
      const double re = normal();
      const double im = normal();
      amplitudes[idx] = {scale * re, scale * im};
      amplitudes[partner] = {scale * re, -scale * im};
    }
  }
  plan.execute();

  LatticeField field;
  field.dimension = d;
  field.side = side;
  field.spacing = spacing;
  field.seed = seed;
  field.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    field.values[i] = amplitudes[i].real();
    field.imag_residue = std::max(field.imag_residue, std::abs(amplitudes[i].imag()));
  }
  return field;
}

}  // namespace sphlap2
