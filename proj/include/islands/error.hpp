#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace islands {

enum class ErrorCode {
  DuplicatePoint,
  DegeneratePosition,
  TooFewPoints,
  CoordinateOutOfRange,
  BadDimension,
  InvalidIndex,
  OracleCapExceeded,
  UnknownIdentity,
  BadParam,
  BadR,
  RepeatedX,
  SingularSystem,
  RangeExceeded,
  BadN,
  RetryBudgetExceeded,
  ParseError,
};

const char* error_code_name(ErrorCode code);

/// The single exception type thrown by the library. `indices()` carries the
/// offending point indices where that is meaningful (duplicates, degenerate
/// triples/quadruples, invalid indices).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> indices = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::vector<int> indices_;
};

}  // namespace islands
