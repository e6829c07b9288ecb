#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace solenoid {

enum class ErrorKind {
  NotCoprime,
  IndexOutOfRange,
  NotPrime,
  MismatchedSpec,
  MismatchedDepth,
  BadIndices,
  BadIndex,
  DepthTooShallow,
  NotMember,
  QNotUsable,
  Incompatible,
  InvalidArgument,
  SyntaxError,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Domain error raised by library operations. `name()` is the stable
// identifier the CLI echoes back to callers.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

// Raised by the text parsers. `position()` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace solenoid
