#pragma once

#include <stdexcept>
#include <string>

namespace geoconvex {

enum class ErrorCode {
  InvalidArgument,
  InvalidBody,
  DimensionMismatch,
  UnsupportedPair,
  UnsupportedStructure,
  UnboundedBody,
  NotInClass,
  Divergent,
  Overflow,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Library-wide exception. Every throw site in geoconvex uses this type so
/// callers can branch on `code()` instead of parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace geoconvex
