#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sphlap2/error.hpp"
#include "sphlap2/params.hpp"

using namespace sphlap2;

namespace {

ErrorCode code_of(double t0, double t1, double t2) {
  try {
    (void)Lap2Params::validate(t0, t1, t2);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected rejection");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("validate classifies the published coefficient vectors") {
  const auto blue = Lap2Params::validate(0.002, 5, 1.25);
  CHECK(blue.regime() == Regime::C1);
  const auto green = Lap2Params::validate(0.002, -0.095, 1.25);
  CHECK(green.regime() == Regime::C2);
  CHECK(green.theta1() == -0.095);
  CHECK(to_string(Regime::C2) == "C2");
}

TEST_CASE("validate names the violated condition") {
  CHECK(code_of(1, -3, 1) == ErrorCode::DiscriminantViolation);
  CHECK(code_of(1, -2, 1) == ErrorCode::DiscriminantViolation);  // boundary: 4 == 4
  CHECK(code_of(0, 1, 1) == ErrorCode::NonPositiveTheta0);
  CHECK(code_of(-1, 1, 1) == ErrorCode::NonPositiveTheta0);
  CHECK(code_of(1, 1, 0) == ErrorCode::NonPositiveTheta2);
  CHECK(code_of(1, 0, 1) == ErrorCode::ZeroTheta1);
  CHECK(code_of(1, -0.0, 1) == ErrorCode::ZeroTheta1);
  CHECK(code_of(NAN, 1, 1) == ErrorCode::NonFiniteArgument);
  CHECK(code_of(1, INFINITY, 1) == ErrorCode::NonFiniteArgument);
}

TEST_CASE("matern_theta substitutes xi into (1, 2 xi^2, xi^4) / (4 pi xi^2)") {
  const double pi = std::numbers::pi;
  const auto p20 = matern_theta(20);
  CHECK(p20.theta0() == doctest::Approx(1.0 / (1600 * pi)).epsilon(1e-14));
  CHECK(p20.theta1() == doctest::Approx(1.0 / (2 * pi)).epsilon(1e-14));
  CHECK(p20.theta2() == doctest::Approx(100.0 / pi).epsilon(1e-14));
  CHECK(p20.theta0() == doctest::Approx(1.98944e-4).epsilon(1e-5));
  CHECK(p20.theta2() == doctest::Approx(31.8310).epsilon(1e-5));

  const auto p1 = matern_theta(1);
  CHECK(p1.theta0() == doctest::Approx(1.0 / (4 * pi)).epsilon(1e-15));
  CHECK(p1.theta1() == doctest::Approx(1.0 / (2 * pi)).epsilon(1e-15));
  CHECK(p1.theta0() == p1.theta2());

  const auto p5 = matern_theta(5);
  CHECK(p5.theta0() == doctest::Approx(1.0 / (100 * pi)).epsilon(1e-14));
  CHECK(p5.theta2() == doctest::Approx(6.25 / pi).epsilon(1e-14));

  CHECK_THROWS_AS(matern_theta(0), Error);
  CHECK_THROWS_AS(matern_theta(-2), Error);
}

TEST_CASE("matern_theta is always C1") {
  for (double xi : {1e-3, 0.1, 1.0, 5.0, 20.0, 1e3}) {
    CHECK(matern_theta(xi).regime() == Regime::C1);
  }
}

TEST_CASE("characteristic_poly") {
  const auto p = Lap2Params::validate(1, 2, 1);
  CHECK(characteristic_poly(p, 0) == 1);
  CHECK(characteristic_poly(p, 1) == 4);

  // C2 minimum sits at z* = -theta1 / (2 theta2) with value (4 t0 t2 - t1^2) / (4 t2).
  const auto green = Lap2Params::validate(0.002, -0.095, 1.25);
  const double zstar = 0.095 / 2.5;
  CHECK(zstar == doctest::Approx(0.038));
  const double vertex = (4 * 0.002 * 1.25 - 0.095 * 0.095) / (4 * 1.25);
  CHECK(characteristic_poly(green, zstar) == doctest::Approx(vertex).epsilon(1e-10));
  CHECK(characteristic_poly(green, zstar) > 0);
}

TEST_CASE("characteristic_poly is positive for random valid coefficients") {
  std::mt19937_64 rng(11);
  for (int draw = 0; draw < 400; ++draw) {
    const auto p = oracle::random_params(rng, draw);
    const double zstar = std::max(0.0, -p.theta1() / (2 * p.theta2()));
    CHECK(characteristic_poly(p, zstar) > 0);
    for (double z = 0; z < 50; z += 0.37) {
      REQUIRE(characteristic_poly(p, z) > 0);
    }
  }
}
