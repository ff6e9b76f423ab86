#include "sphlap2/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sphlap2/error.hpp"

namespace sphlap2 {

std::string_view to_string(Regime regime) noexcept {
  return regime == Regime::C1 ? "C1" : "C2";
}

Lap2Params Lap2Params::validate(double theta0, double theta1, double theta2) {
  if (!std::isfinite(theta0) || !std::isfinite(theta1) || !std::isfinite(theta2)) {
    throw Error(ErrorCode::NonFiniteArgument, "theta components must be finite");
  }
  if (!(theta0 > 0.0)) {
    throw Error(ErrorCode::NonPositiveTheta0, "theta0 must be > 0");
  }
  if (!(theta2 > 0.0)) {
    throw Error(ErrorCode::NonPositiveTheta2, "theta2 must be > 0");
  }
  if (theta1 == 0.0) {
    throw Error(ErrorCode::ZeroTheta1, "theta1 = 0 lies in neither C1 nor C2");
  }
  if (theta1 > 0.0) {
    return {theta0, theta1, theta2, Regime::C1};
  }
  if (theta1 * theta1 < 4.0 * theta0 * theta2) {
    return {theta0, theta1, theta2, Regime::C2};
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "theta1^2 = " << theta1 * theta1 << " is not < 4 theta0 theta2 = "
      << 4.0 * theta0 * theta2;
  throw Error(ErrorCode::DiscriminantViolation, msg.str());
}

Lap2Params matern_theta(double xi) {
  if (!std::isfinite(xi) || !(xi > 0.0)) {
    throw Error(ErrorCode::NonPositiveXi, "xi must be finite and > 0");
  }
  const double xi2 = xi * xi;
  const double scale = 1.0 / (4.0 * std::numbers::pi * xi2);
  return Lap2Params::validate(scale, scale * 2.0 * xi2, scale * xi2 * xi2);
}

double characteristic_poly(const Lap2Params& params, double z) noexcept {
  return params.theta0() + z * (params.theta1() + z * params.theta2());
}

}  // namespace sphlap2
