#pragma once

#include <string_view>

namespace sphlap2 {

// Which positivity condition on the LAP2 coefficients holds.
//   C1: all three coefficients positive.
//   C2: theta0, theta2 > 0, theta1 < 0 and theta1^2 < 4 theta0 theta2.
enum class Regime { C1, C2 };

std::string_view to_string(Regime regime) noexcept;

/// Coefficients of the precision operator theta0 - theta1 Lap + theta2 Lap^2.
///
/// Instances only exist for coefficient vectors inside C1 or C2, which is
/// exactly the set for which the characteristic polynomial
/// theta0 + theta1 z + theta2 z^2 stays strictly positive on z >= 0.
class Lap2Params {
 public:
  /// Throws sphlap2::Error naming the violated condition. theta1 == 0 is
  /// rejected (it belongs to neither C1 nor C2). The discriminant test is an
  /// exact floating comparison.
  static Lap2Params validate(double theta0, double theta1, double theta2);

  [[nodiscard]] double theta0() const noexcept { return theta0_; }
  [[nodiscard]] double theta1() const noexcept { return theta1_; }
  [[nodiscard]] double theta2() const noexcept { return theta2_; }
  [[nodiscard]] Regime regime() const noexcept { return regime_; }

  friend bool operator==(const Lap2Params&, const Lap2Params&) = default;

 private:
  Lap2Params(double t0, double t1, double t2, Regime regime)
      : theta0_(t0), theta1_(t1), theta2_(t2), regime_(regime) {}

  double theta0_;
  double theta1_;
  double theta2_;
  Regime regime_;
};

/// Coefficients (1, 2 xi^2, xi^4) / (4 pi xi^2). For vanishing bandwidth the
/// resulting spectrum is the inverse of the Matern nu=1 spectral density
/// 4 pi xi^2 / (1 + k^2 xi^2)^2 with correlation length xi.
Lap2Params matern_theta(double xi);

/// theta0 + theta1 z + theta2 z^2, the operator's symbol at z = |k|^2.
double characteristic_poly(const Lap2Params& params, double z) noexcept;

}  // namespace sphlap2
