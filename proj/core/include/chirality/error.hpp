#pragma once

#include <stdexcept>
#include <string>

namespace chirality {

enum class ErrorCode {
  DegenerateInput,
  ZeroDirection,
  OriginNotInterior,
  SolverFailure,
  DegenerateShape,
  NotATriangleOrParallelogram,
  NotAParallelogram,
  OutOfDomain,
  OutOfRange,
  ParseError,
  IOError,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chirality
