#pragma once

#include <stdexcept>
#include <string>

namespace glmn {

enum class ErrorCode {
  DivisionByZero,
  PoleAtZero,
  PoleAtPoint,
  KernelPole,
  IndexOutOfRange,
  CardinalityMismatch,
  ColoringMismatch,
  EmptyColor,
  DuplicateNode,
  SingularJacobian,
  NonConvergence,
  InvalidArgument,
  FieldMismatch,
  ConfigError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code), detail_(what) {}
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  Error annotated(const std::string& context) const { return Error(code_, detail_ + " (" + context + ")"); }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace glmn
