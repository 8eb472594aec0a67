#include "islands/error.hpp"

namespace islands {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::DegeneratePosition: return "DegeneratePosition";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::BadR: return "BadR";
    case ErrorCode::RepeatedX: return "RepeatedX";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::RangeExceeded: return "RangeExceeded";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::RetryBudgetExceeded: return "RetryBudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<int> indices)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      indices_(std::move(indices)) {}

}  // namespace islands
