#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sphlap2/error.hpp"
#include "sphlap2/kernel.hpp"
#include "sphlap2/radial.hpp"

using namespace sphlap2;

TEST_CASE("hermite polynomials") {
  CHECK(hermite(2, 0) == -1);
  CHECK(hermite(4, 0) == 3);
  CHECK(hermite(3, 2) == 2);
  CHECK(hermite(1, -1.5) == -1.5);
  CHECK(hermite(4, 1) == -2);
  CHECK_THROWS_AS(hermite(0, 1), Error);
  CHECK_THROWS_AS(hermite(5, 1), Error);
  try {
    hermite(5, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedOrder);
  }
}

TEST_CASE("gaussian_derivative spot values") {
  CHECK(gaussian_derivative(1, 0, 1) == 0);
  CHECK(gaussian_derivative(2, 0, 1) == -1);
  CHECK(gaussian_derivative(4, 0, 2) == doctest::Approx(3.0 / 16));
  CHECK_THROWS_AS(gaussian_derivative(5, 0, 1), Error);
}

TEST_CASE("gaussian_derivative matches finite differences") {
  // Each order is checked against a Richardson central difference of the
  // order below; order 1 differentiates exp(-r^2/2h^2) itself.
  for (double h : {0.5, 1.0, 2.0}) {
    for (int n = 1; n <= 4; ++n) {
      std::function<double(double)> lower = [h](double r) { return std::exp(-0.5 * r * r / (h * h)); };
      if (n > 1) lower = [h, n](double r) { return gaussian_derivative(n - 1, r, h); };
      const double scale = std::pow(h, -n) * 3.0;  // |He_n| e^{-x^2/2} <= 3 for n <= 4
      for (double r = 0; r <= 5 * h; r += 0.1 * h) {
        const double fd = oracle::derivative(lower, r, 1e-4 * h);
        const double exact = gaussian_derivative(n, r, h);
        CHECK(std::abs(fd - exact) <= 1e-6 * std::max(std::abs(exact), 1e-3 * scale));
      }
    }
  }
}

TEST_CASE("radial_laplacian") {
  CHECK(radial_laplacian({0, 4.5, 0, 0}, 0.7, 3) == 4.5);
  const double r = 1.7;
  CHECK(radial_laplacian({2 * r, 2, 0, 0}, r, 3) == doctest::Approx(6));
  const RadialDerivatives g{gaussian_derivative(1, 1, 1), gaussian_derivative(2, 1, 1), 0, 0};
  CHECK(radial_laplacian(g, 1, 2) == doctest::Approx(-std::exp(-0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(radial_laplacian(g, 0, 2), Error);
  CHECK_THROWS_AS(radial_laplacian(g, -1, 2), Error);
}

TEST_CASE("radial_bilaplacian") {
  for (double r : {0.3, 1.0, 2.5}) {
    const RadialDerivatives r4{4 * r * r * r, 12 * r * r, 24 * r, 24};
    CHECK(radial_bilaplacian(r4, r, 2) == doctest::Approx(64).epsilon(1e-13));
    // d = 1 keeps only the fourth derivative.
    CHECK(radial_bilaplacian({3, -2, 7, 11}, r, 1) == 11);
  }
  // Bi-Laplacian of r^4 is 8 d (d + 2); in 3D that's 120.
  CHECK(radial_bilaplacian({4, 12, 24, 24}, 1, 3) == doctest::Approx(120));
  CHECK_THROWS_AS(radial_bilaplacian({}, 0, 2), Error);
}

TEST_CASE("gaussian Laplacian and Bi-Laplacian agree with the generic radial operators") {
  for (int d = 1; d <= 3; ++d) {
    for (double h : {0.5, 1.5}) {
      for (double r = 0.05 * h; r < 6 * h; r += 0.11 * h) {
        const RadialDerivatives g{gaussian_derivative(1, r, h), gaussian_derivative(2, r, h),
                                  gaussian_derivative(3, r, h), gaussian_derivative(4, r, h)};
        const double scale = d * (d + 2) / std::pow(h, 4);
        CHECK(std::abs(gaussian_laplacian(r, h, d) - radial_laplacian(g, r, d)) <= 1e-12 * d / (h * h));
        CHECK(std::abs(gaussian_bilaplacian(r, h, d) - radial_bilaplacian(g, r, d)) <= 1e-11 * scale);
      }
    }
  }
}

TEST_CASE("singular terms of the Gaussian Bi-Laplacian cancel at the origin") {
  for (int d = 1; d <= 3; ++d) {
    for (double h : {0.2, 1.0, 3.0}) {
      const double limit = gaussian_bilaplacian(0, h, d);
      CHECK(limit == doctest::Approx(d * (d + 2) / std::pow(h, 4)));
      for (double r : {1e-8 * h, 2e-8 * h, 1e-6 * h, 1e-4 * h}) {
        const double v = gaussian_bilaplacian(r, h, d);
        CHECK(std::isfinite(v));
        CHECK(std::abs(v - limit) < 1e-6 * std::abs(limit));
      }
      const double lap0 = gaussian_laplacian(0, h, d);
      CHECK(lap0 == doctest::Approx(-d / (h * h)));
      CHECK(std::abs(gaussian_laplacian(1e-8 * h, h, d) - lap0) < 1e-6 * std::abs(lap0));
    }
  }
}

TEST_CASE("Gaussian K2 Laplacians match Cartesian finite differences") {
  for (int d = 1; d <= 3; ++d) {
    for (double h : {0.7, 1.0}) {
      const GaussianKernel kernel(h, d);
      const double c = kernel.k2_prefactor();
      auto k2 = [&](double r) { return kernel.k2(r); };
      auto lap = [&](double r) { return c * gaussian_laplacian(r, h, d); };
      const double lap_scale = c * d / (h * h);
      const double bilap_scale = c * d * (d + 2) / std::pow(h, 4);
      for (double r = 0.1 * h; r <= 5 * h; r += 0.1 * h) {
        const double fd_lap = oracle::cartesian_laplacian(k2, r, d, 1e-2 * h);
        CHECK(oracle::rel_err(lap(r), fd_lap, 1e-3 * lap_scale) < 1e-4);
        const double fd_bilap = oracle::cartesian_laplacian(lap, r, d, 1e-2 * h);
        CHECK(oracle::rel_err(c * gaussian_bilaplacian(r, h, d), fd_bilap, 1e-3 * bilap_scale) < 1e-4);
      }
    }
  }
}
