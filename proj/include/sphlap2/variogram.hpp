#pragma once

#include <cstdint>
#include <vector>

#include "sphlap2/simulate.hpp"

namespace sphlap2 {

enum class Axis { Rows, Columns, Averaged };

struct VariogramEstimate {
  std::vector<int> lags;               // 0 .. max_lag, lattice units
  std::vector<double> semivariance;    // semivariance[0] == 0
  std::vector<std::int64_t> pair_counts;
  Axis axis = Axis::Averaged;
};

/// Method-of-moments semivariogram along lattice rows, columns, or the mean
/// of both: gamma(l) = 1/(2 N_l) sum (x_i - x_j)^2 over the N_l axis-aligned
/// pairs at lag l. Pairs do not wrap around the periodic boundary. For d = 1
/// only Rows and Averaged (identical) are defined.
VariogramEstimate empirical_variogram(const LatticeField& field, int max_lag, Axis axis);

/// Divides every semivariance by variance (sill normalization).
VariogramEstimate normalized(VariogramEstimate estimate, double variance);

/// Mean square deviation from the sample mean (1/n normalization).
double sample_variance(const LatticeField& field);

/// Matern nu=1 variogram with unit sill: 1 - (r/xi) K1(r/xi).
double matern1_variogram(double r, double xi);

/// Modified Bessel function of the second kind, order 1, for x > 0.
/// Power series for x <= 2, trapezoidal rule on
/// K1(x) = int_0^inf exp(-x cosh t) cosh t dt above that.
double bessel_k1(double x);

}  // namespace sphlap2
