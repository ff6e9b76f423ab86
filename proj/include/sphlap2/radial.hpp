#pragma once

namespace sphlap2 {

/// First through fourth derivatives of a radial profile C(r) at one r.
struct RadialDerivatives {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;
};

/// Probabilists' Hermite polynomial He_n(x), n in 1..4.
double hermite(int n, double x);

/// n-th derivative (n in 1..4) of exp(-r^2 / 2h^2) with respect to r.
double gaussian_derivative(int n, double r, double h);

/// Laplacian in d dimensions of a radial function: C'' + (d-1)/r C'.
/// Throws NonPositiveRadius for r <= 0.
double radial_laplacian(const RadialDerivatives& derivs, double r, int d);

/// Bi-Laplacian in d dimensions of a radial function:
///   C'''' + 2(d-1)/r C''' + ((d-1)^2 - 2(d-1))/r^2 (C'' - C'/r).
/// Throws NonPositiveRadius for r <= 0.
double radial_bilaplacian(const RadialDerivatives& derivs, double r, int d);

// Radius below which the Gaussian Laplacian helpers return their r -> 0 limits.
constexpr double kGaussianZeroRadius = 1e-8;  // in units of h

/// Laplacian of g(r) = exp(-r^2 / 2h^2) in d dimensions, evaluated from the
/// Hermite forms. Equals g(r) (r^2/h^2 - d) / h^2; -d/h^2 at r = 0.
double gaussian_laplacian(double r, double h, int d);

/// Bi-Laplacian of g(r) = exp(-r^2 / 2h^2) in d dimensions.
///
/// The He2 and He1 terms are individually O(r^-2) but their sum is the
/// constant ((d-1)^2 - 2(d-1)) / h^4, which is used directly so the result
/// stays accurate as r -> 0. The He3 term is divided by x = r/h
/// analytically for the same reason. For r < 1e-8 h the exact limit
/// d(d+2)/h^4 is returned.
double gaussian_bilaplacian(double r, double h, int d);

}  // namespace sphlap2
