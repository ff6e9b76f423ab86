#include "sphlap2/variogram.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "sphlap2/error.hpp"

namespace sphlap2 {

namespace {

struct AxisSums {
  std::vector<double> sum_sq;
  std::vector<std::int64_t> counts;
};

AxisSums row_sums(const LatticeField& field, int max_lag) {
  AxisSums out{std::vector<double>(max_lag + 1, 0.0), std::vector<std::int64_t>(max_lag + 1, 0)};
  for (int lag = 0; lag <= max_lag; ++lag) {
    for (int i = 0; i < field.rows(); ++i) {
      for (int j = 0; j + lag < field.columns(); ++j) {
        const double diff = field.at(i, j + lag) - field.at(i, j);
        out.sum_sq[lag] += diff * diff;
      }
    }
    out.counts[lag] = static_cast<std::int64_t>(field.rows()) * (field.columns() - lag);
  }
  return out;
}

AxisSums column_sums(const LatticeField& field, int max_lag) {
  AxisSums out{std::vector<double>(max_lag + 1, 0.0), std::vector<std::int64_t>(max_lag + 1, 0)};
  for (int lag = 0; lag <= max_lag; ++lag) {
    for (int i = 0; i + lag < field.rows(); ++i) {
      for (int j = 0; j < field.columns(); ++j) {
        const double diff = field.at(i + lag, j) - field.at(i, j);
        out.sum_sq[lag] += diff * diff;
      }
    }
    out.counts[lag] = static_cast<std::int64_t>(field.columns()) * (field.rows() - lag);
  }
  return out;
}

std::vector<double> semivariances(const AxisSums& sums) {
  std::vector<double> gamma(sums.sum_sq.size());
  for (std::size_t l = 0; l < gamma.size(); ++l) {
    gamma[l] = sums.sum_sq[l] / (2.0 * static_cast<double>(sums.counts[l]));
  }
  return gamma;
}

}  // namespace

VariogramEstimate empirical_variogram(const LatticeField& field, int max_lag, Axis axis) {
  if (max_lag < 1 || max_lag >= field.side) {
    throw Error(ErrorCode::LagOutOfRange, "max_lag must satisfy 1 <= max_lag < L, got " +
                                              std::to_string(max_lag));
  }
  if (field.dimension == 1 && axis == Axis::Columns) {
    throw Error(ErrorCode::UnsupportedAxis, "a one-dimensional field has no columns");
  }

  VariogramEstimate est;
  est.axis = axis;
  est.lags.resize(max_lag + 1);
  std::iota(est.lags.begin(), est.lags.end(), 0);

  if (field.dimension == 1 || axis == Axis::Rows) {
    AxisSums rows = row_sums(field, max_lag);
    est.semivariance = semivariances(rows);
    est.pair_counts = std::move(rows.counts);
    return est;
  }
  if (axis == Axis::Columns) {
    AxisSums cols = column_sums(field, max_lag);
    est.semivariance = semivariances(cols);
    est.pair_counts = std::move(cols.counts);
    return est;
  }
  const AxisSums rows = row_sums(field, max_lag);
  const AxisSums cols = column_sums(field, max_lag);
  const std::vector<double> g_rows = semivariances(rows);
  const std::vector<double> g_cols = semivariances(cols);
  est.semivariance.resize(g_rows.size());
  est.pair_counts.resize(g_rows.size());
  for (std::size_t l = 0; l < g_rows.size(); ++l) {
    est.semivariance[l] = 0.5 * (g_rows[l] + g_cols[l]);
    est.pair_counts[l] = rows.counts[l] + cols.counts[l];
  }
  return est;
}

VariogramEstimate normalized(VariogramEstimate estimate, double variance) {
  if (!(variance > 0.0)) {
    throw Error(ErrorCode::NonPositiveArgument, "normalizing variance must be > 0");
  }
  for (double& g : estimate.semivariance) g /= variance;
  return estimate;
}

double sample_variance(const LatticeField& field) {
  const auto n = static_cast<double>(field.values.size());
  const double mean = std::accumulate(field.values.begin(), field.values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : field.values) ss += (v - mean) * (v - mean);
  return ss / n;
}

double matern1_variogram(double r, double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw Error(ErrorCode::NonPositiveXi, "xi must be finite and > 0");
  }
  if (!(r >= 0.0)) {
    throw Error(ErrorCode::NonPositiveArgument, "lag must be >= 0");
  }
  if (r == 0.0) return 0.0;
  const double x = r / xi;
  if (x > 700.0) return 1.0;
  return 1.0 - x * bessel_k1(x);
}

double bessel_k1(double x) {
  if (!(x > 0.0)) {
    throw Error(ErrorCode::NonPositiveArgument, "K1 needs x > 0");
  }
  if (std::isinf(x)) return 0.0;

  if (x <= 2.0) {
    // K1(x) = 1/x + ln(x/2) I1(x) - (x/4) sum_k [psi(k+1) + psi(k+2)] q^k / (k! (k+1)!)
    // with q = x^2/4.
    const double q = 0.25 * x * x;
    double term = 1.0;  // q^k / (k! (k+1)!)
    double psi_k1 = -std::numbers::egamma;  // psi(k+1)
    double psi_k2 = psi_k1 + 1.0;           // psi(k+2)
    double i1_sum = 0.0;
    double psi_sum = 0.0;
    for (int k = 0; k < 40; ++k) {
      i1_sum += term;
      psi_sum += (psi_k1 + psi_k2) * term;
      if (term < 1e-18 * i1_sum) break;
      term *= q / ((k + 1.0) * (k + 2.0));
      psi_k1 += 1.0 / (k + 1.0);
      psi_k2 += 1.0 / (k + 2.0);
    }
    const double i1 = 0.5 * x * i1_sum;
    return 1.0 / x + std::log(0.5 * x) * i1 - 0.25 * x * psi_sum;
  }

  // The integrand is analytic in the strip |Im t| < pi/2, so the trapezoidal
  // error is O(exp(-pi^2 / step)). Factor out exp(-x) to avoid underflow.
  constexpr double kStep = 0.1;
  constexpr double kTailExponent = 60.0;
  double sum = 0.5;
  for (int i = 1;; ++i) {
    const double t = i * kStep;
    const double c = std::cosh(t);
    const double exponent = x * (c - 1.0);
    if (exponent > kTailExponent) break;
    sum += std::exp(-exponent) * c;
  }
  return std::exp(-x) * kStep * sum;
}

}  // namespace sphlap2
