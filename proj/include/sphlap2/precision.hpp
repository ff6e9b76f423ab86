#pragma once

#include <functional>

#include "sphlap2/kernel.hpp"
#include "sphlap2/params.hpp"

namespace sphlap2 {

/// exp(-k^2 h^2 / 2) (theta0 + theta1 k^2 + theta2 k^4). Accepts h = 0, in
/// which case the kernel factor is 1 and the bare polynomial is returned.
double spectral_function(const Lap2Params& params, double h, double knorm);

/// The SPH-LAP2 precision function Q*(r) for the Gaussian smoothing kernel.
///
/// Q*(r) = theta0 K2 - theta1 Lap K2 + theta2 Lap^2 K2, with the closed form
///
///   Q*(r) = exp(-r^2/2h^2) / (h sqrt(2 pi))^d
///           * { theta0 - theta1/h^2 (u - d)
///               + theta2/h^4 [u^2 - 2(d+2) u + d(d+2)] },   u = r^2/h^2.
///
/// Its Fourier transform is strictly positive and integrable under C1/C2,
/// so Q* is positive definite and Q*(0) is its global maximum.
class PrecisionFunction {
 public:
  PrecisionFunction(Lap2Params params, GaussianKernel kernel)
      : params_(params), kernel_(kernel) {}

  [[nodiscard]] const Lap2Params& params() const noexcept { return params_; }
  [[nodiscard]] const GaussianKernel& kernel() const noexcept { return kernel_; }
  [[nodiscard]] int dimension() const noexcept { return kernel_.dimension(); }
  [[nodiscard]] double bandwidth() const noexcept { return kernel_.bandwidth(); }

  [[nodiscard]] double spectral(double knorm) const;
  [[nodiscard]] double value(double r) const;
  [[nodiscard]] double value_at_zero() const;

  /// A radius beyond which |Q*(r)| < rel * Q*(0) is guaranteed, from the
  /// envelope of the closed form with absolute-valued coefficients.
  [[nodiscard]] double decay_radius(double rel) const;

 private:
  Lap2Params params_;
  GaussianKernel kernel_;
};

/// Q*(r) assembled from K2 and its radial derivatives through the radial
/// Laplacian and Bi-Laplacian. Works for any SmoothingKernel. At r = 0 the
/// kernel's zero limits are used; NonPositiveRadius if it provides none.
double generic_value(const Lap2Params& params, const SmoothingKernel& kernel, double r);

/// Inverse Fourier transform of a radial spectrum by adaptive quadrature on
/// [0, k_max]:
///   d = 1:  (1/pi)   int cos(k r) S(k) dk
///   d = 2:  (1/2 pi) int k J0(k r) S(k) dk
/// Other dimensions throw UnsupportedDimension.
double radial_inverse_ft(const std::function<double(double)>& spectrum, int d, double r,
                         double k_max);

/// Numeric inverse FT of pf.spectral(), cut off at
/// k_max = max(40 / h, 20 (theta0 / theta2)^(1/4)). This is
/// independent of the closed form in PrecisionFunction::value.
double inverse_ft_quadrature(const PrecisionFunction& pf, double r);

}  // namespace sphlap2
