#pragma once

// Test-only reference routines. Nothing here calls into the closed forms it
// is used to check.

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "sphlap2/params.hpp"

namespace oracle {

// Central difference with one Richardson step: O(step^4).
inline double derivative(const std::function<double(double)>& f, double x, double step) {
  auto central = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
  return (4.0 * central(0.5 * step) - central(step)) / 3.0;
}

inline double second_derivative(const std::function<double(double)>& f, double x, double step) {
  auto central = [&](double s) { return (f(x + s) - 2.0 * f(x) + f(x - s)) / (s * s); };
  return (4.0 * central(0.5 * step) - central(step)) / 3.0;
}

// Laplacian of a radial profile g(|p|) by Cartesian second differences at
// p = (r, 0, ..., 0) in d dimensions.
inline double cartesian_laplacian(const std::function<double(double)>& profile, double r, int d,
                                  double step) {
  double total = 0.0;
  for (int axis = 0; axis < d; ++axis) {
    auto along = [&](double t) {
      Eigen::Vector3d p(r, 0.0, 0.0);
      p[axis] += t;
      return profile(p.head(d).norm());
    };
    total += second_derivative(along, 0.0, step);
  }
  return total;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

// Valid coefficients; odd draws land in C2.
inline sphlap2::Lap2Params random_params(std::mt19937_64& rng, int draw) {
  const double t0 = log_uniform(rng, 1e-3, 2.0);
  const double t2 = log_uniform(rng, 1e-2, 5.0);
  if (draw % 2 == 0) {
    return sphlap2::Lap2Params::validate(t0, log_uniform(rng, 1e-2, 5.0), t2);
  }
  std::uniform_real_distribution<double> frac(0.05, 0.95);
  return sphlap2::Lap2Params::validate(t0, -frac(rng) * 2.0 * std::sqrt(t0 * t2), t2);
}

// Q~*(k) recomputed from the coefficients for the squared exponential kernel.
inline double gaussian_spectrum(const sphlap2::Lap2Params& p, double h, double k) {
  const double k2 = k * k;
  return std::exp(-0.5 * k2 * h * h) * (p.theta0() + p.theta1() * k2 + p.theta2() * k2 * k2);
}

// Radial inverse Fourier transform by 30-point Gauss-Legendre on panels of
// width 1/(4h) up to k = 40/h. d = 1: (1/pi) int cos(kr) S dk;
// d = 2: (1/2pi) int k J0(kr) S dk.
inline double inverse_ft(const std::function<double(double)>& spectrum, int d, double r, double h) {
  using boost::math::quadrature::gauss;
  std::function<double(double)> integrand;
  if (d == 1) {
    integrand = [&](double k) { return std::cos(k * r) * spectrum(k) / std::numbers::pi; };
  } else {
    integrand = [&](double k) { return k * boost::math::cyl_bessel_j(0, k * r) * spectrum(k) / (2 * std::numbers::pi); };
  }
  double total = 0.0;
  const double panel = 0.25 / h;
  for (int i = 0; i < 160; ++i) {
    total += gauss<double, 30>::integrate(integrand, i * panel, (i + 1) * panel);
  }
  return total;
}

inline double rel_err(double got, double want, double floor = 0.0) {
  return std::abs(got - want) / std::max(std::abs(want), floor);
}

}  // namespace oracle
