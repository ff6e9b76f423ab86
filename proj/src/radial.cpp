#include "sphlap2/radial.hpp"

#include <cmath>
#include <string>

#include "sphlap2/error.hpp"

namespace sphlap2 {

namespace {

void require_order(int n) {
  if (n < 1 || n > 4) {
    throw Error(ErrorCode::UnsupportedOrder,
                "Hermite order must be in 1..4, got " + std::to_string(n));
  }
}

void require_positive_radius(double r) {
  if (!(r > 0.0)) {
    throw Error(ErrorCode::NonPositiveRadius, "radial operator needs r > 0");
  }
}

}  // namespace

double hermite(int n, double x) {
  require_order(n);
  const double x2 = x * x;
  switch (n) {
    case 1: return x;
    case 2: return x2 - 1.0;
    case 3: return x * (x2 - 3.0);
    default: return x2 * (x2 - 6.0) + 3.0;
  }
}

double gaussian_derivative(int n, double r, double h) {
  require_order(n);
  const double x = r / h;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign / std::pow(h, n) * hermite(n, x) * std::exp(-0.5 * x * x);
}

double radial_laplacian(const RadialDerivatives& derivs, double r, int d) {
  require_positive_radius(r);
  return derivs.d2 + (d - 1) / r * derivs.d1;
}

double radial_bilaplacian(const RadialDerivatives& derivs, double r, int d) {
  require_positive_radius(r);
  const double dm1 = d - 1;
  const double c = dm1 * dm1 - 2.0 * dm1;
  return derivs.d4 + 2.0 * dm1 / r * derivs.d3 + c / (r * r) * (derivs.d2 - derivs.d1 / r);
}

double gaussian_laplacian(double r, double h, int d) {
  const double h2 = h * h;
  if (r < kGaussianZeroRadius * h) {
    return -d / h2;
  }
  const double x = r / h;
  const double g = std::exp(-0.5 * x * x);
  // He1(x) / (r h) == 1 / h^2
  return g * (hermite(2, x) / h2 + (1.0 - d) / h2);
}

double gaussian_bilaplacian(double r, double h, int d) {
  const double h4 = h * h * h * h;
  if (r < kGaussianZeroRadius * h) {
    return d * (d + 2.0) / h4;
  }
  const double x = r / h;
  const double g = std::exp(-0.5 * x * x);
  const double dm1 = d - 1;
  const double he3_over_x = x * x - 3.0;
  const double singular_pair = dm1 * dm1 - 2.0 * dm1;
  return g / h4 * (hermite(4, x) + 2.0 * (1.0 - d) * he3_over_x + singular_pair);
}

}  // namespace sphlap2
