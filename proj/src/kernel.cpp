#include "sphlap2/kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sphlap2/error.hpp"

namespace sphlap2 {

GaussianKernel::GaussianKernel(double h, int d) : h_(h), d_(d) {
  if (!std::isfinite(h) || !(h > 0.0)) {
    throw Error(ErrorCode::NonPositiveBandwidth, "kernel bandwidth h must be finite and > 0");
  }
  if (d < 1 || d > 3) {
    throw Error(ErrorCode::UnsupportedDimension,
                "dimension must be 1, 2 or 3, got " + std::to_string(d));
  }
  prefactor_ = std::pow(h * std::sqrt(std::numbers::pi), -d);
  k2_prefactor_ = std::pow(h * std::sqrt(2.0 * std::numbers::pi), -d);
}

double GaussianKernel::value(double r) const {
  const double x = r / h_;
  return prefactor_ * std::exp(-x * x);
}

double GaussianKernel::ft(double knorm) const {
  const double kh = knorm * h_;
  return std::exp(-0.25 * kh * kh);
}

double GaussianKernel::k2(double r) const {
  const double x = r / h_;
  return k2_prefactor_ * std::exp(-0.5 * x * x);
}

RadialDerivatives GaussianKernel::k2_derivatives(double r) const {
  return {
      k2_prefactor_ * gaussian_derivative(1, r, h_),
      k2_prefactor_ * gaussian_derivative(2, r, h_),
      k2_prefactor_ * gaussian_derivative(3, r, h_),
      k2_prefactor_ * gaussian_derivative(4, r, h_),
  };
}

std::optional<double> GaussianKernel::k2_laplacian_at_zero() const {
  return k2_prefactor_ * gaussian_laplacian(0.0, h_, d_);
}

std::optional<double> GaussianKernel::k2_bilaplacian_at_zero() const {
  return k2_prefactor_ * gaussian_bilaplacian(0.0, h_, d_);
}

double GaussianKernel::ft_tail_exponent() const noexcept {
  return -std::numeric_limits<double>::infinity();
}

bool decay_condition_ok(double tail_exponent, int d) noexcept {
  return tail_exponent < -(d + 4) / 2.0;
}

}  // namespace sphlap2
