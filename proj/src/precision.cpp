#include "sphlap2/precision.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sphlap2/error.hpp"

namespace sphlap2 {

double spectral_function(const Lap2Params& params, double h, double knorm) {
  const double k2 = knorm * knorm;
  return std::exp(-0.5 * k2 * h * h) * characteristic_poly(params, k2);
}

double PrecisionFunction::spectral(double knorm) const {
  return spectral_function(params_, kernel_.bandwidth(), knorm);
}

double PrecisionFunction::value(double r) const {
  if (r == 0.0) return value_at_zero();
  const double h = kernel_.bandwidth();
  const double d = kernel_.dimension();
  const double h2 = h * h;
  const double u = r * r / h2;
  const double braces = params_.theta0() - params_.theta1() / h2 * (u - d) +
                        params_.theta2() / (h2 * h2) * (u * (u - 2.0 * (d + 2.0)) + d * (d + 2.0));
  return kernel_.k2_prefactor() * std::exp(-0.5 * u) * braces;
}

double PrecisionFunction::value_at_zero() const {
  const double h2 = kernel_.bandwidth() * kernel_.bandwidth();
  const double d = kernel_.dimension();
  return kernel_.k2_prefactor() * (params_.theta0() + params_.theta1() * d / h2 +
                                   params_.theta2() * (d * d + 2.0 * d) / (h2 * h2));
}

double PrecisionFunction::decay_radius(double rel) const {
  const double h = kernel_.bandwidth();
  const double d = kernel_.dimension();
  const double h2 = h * h;
  const double a0 = std::abs(params_.theta0());
  const double a1 = std::abs(params_.theta1()) / h2;
  const double a2 = params_.theta2() / (h2 * h2);
  const double target = rel * value_at_zero() / kernel_.k2_prefactor();
  auto envelope = [&](double u) {
    return std::exp(-0.5 * u) * (a0 + a1 * (u + d) + a2 * (u * u + 2.0 * (d + 2.0) * u + d * (d + 2.0)));
  };
  // The envelope is eventually decreasing; scan outward and keep the last
  // crossing.
  constexpr double kStep = 0.01;
  constexpr double kMaxX = 64.0;
  double last_above = 0.0;
  for (double x = 0.0; x <= kMaxX; x += kStep) {
    if (envelope(x * x) >= target) last_above = x;
  }
  return (last_above + kStep) * h;
}

double generic_value(const Lap2Params& params, const SmoothingKernel& kernel, double r) {
  const int d = kernel.dimension();
  const double k2 = kernel.k2(r);
  double lap = 0.0;
  double bilap = 0.0;
  if (r > 0.0) {
    const RadialDerivatives derivs = kernel.k2_derivatives(r);
    lap = radial_laplacian(derivs, r, d);
    bilap = radial_bilaplacian(derivs, r, d);
  } else {
    const auto lap0 = kernel.k2_laplacian_at_zero();
    const auto bilap0 = kernel.k2_bilaplacian_at_zero();
    if (!lap0 || !bilap0) {
      throw Error(ErrorCode::NonPositiveRadius, "kernel provides no r -> 0 limits");
    }
    lap = *lap0;
    bilap = *bilap0;
  }
  return params.theta0() * k2 - params.theta1() * lap + params.theta2() * bilap;
}

double radial_inverse_ft(const std::function<double(double)>& spectrum, int d, double r,
                         double k_max) {
  using Integrator = boost::math::quadrature::gauss_kronrod<double, 61>;
  constexpr unsigned kMaxDepth = 25;
  constexpr double kTolerance = 1e-13;
  switch (d) {
    case 1: {
      auto f = [&](double k) { return std::cos(k * r) * spectrum(k); };
      return Integrator::integrate(f, 0.0, k_max, kMaxDepth, kTolerance) / std::numbers::pi;
    }
    case 2: {
      auto f = [&](double k) { return k * std::cyl_bessel_j(0.0, k * r) * spectrum(k); };
      return Integrator::integrate(f, 0.0, k_max, kMaxDepth, kTolerance) / (2.0 * std::numbers::pi);
    }
    default:
      throw Error(ErrorCode::UnsupportedDimension,
                  "quadrature inverse FT is available for d = 1, 2 only, got " + std::to_string(d));
  }
}

double inverse_ft_quadrature(const PrecisionFunction& pf, double r) {
  const auto& p = pf.params();
  const double k_max = std::max(40.0 / pf.bandwidth(), 20.0 * std::pow(p.theta0() / p.theta2(), 0.25));
  return radial_inverse_ft([&pf](double k) { return pf.spectral(k); }, pf.dimension(), r, k_max);
}

}  // namespace sphlap2
