#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphlap2 {

enum class ErrorCode {
  NonFiniteArgument,
  NonPositiveTheta0,
  NonPositiveTheta2,
  ZeroTheta1,
  DiscriminantViolation,
  NonPositiveXi,
  NonPositiveBandwidth,
  UnsupportedDimension,
  UnsupportedOrder,
  NonPositiveRadius,
  NonPositiveWeight,
  DimensionMismatch,
  NegativeEpsilon,
  LengthMismatch,
  IndexOutOfRange,
  TooLargeForDenseCheck,
  OddLatticeSize,
  LagOutOfRange,
  UnsupportedAxis,
  NonPositiveArgument,
  MissingValues,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sphlap2
