#include "sphlap2/error.hpp"

namespace sphlap2 {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFiniteArgument: return "NonFiniteArgument";
    case ErrorCode::NonPositiveTheta0: return "NonPositiveTheta0";
    case ErrorCode::NonPositiveTheta2: return "NonPositiveTheta2";
    case ErrorCode::ZeroTheta1: return "ZeroTheta1";
    case ErrorCode::DiscriminantViolation: return "DiscriminantViolation";
    case ErrorCode::NonPositiveXi: return "NonPositiveXi";
    case ErrorCode::NonPositiveBandwidth: return "NonPositiveBandwidth";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeEpsilon: return "NegativeEpsilon";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooLargeForDenseCheck: return "TooLargeForDenseCheck";
    case ErrorCode::OddLatticeSize: return "OddLatticeSize";
    case ErrorCode::LagOutOfRange: return "LagOutOfRange";
    case ErrorCode::UnsupportedAxis: return "UnsupportedAxis";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::MissingValues: return "MissingValues";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace sphlap2
