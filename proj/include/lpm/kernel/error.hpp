#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpm::kernel {

enum class ErrorKind {
  UnboundIdentifier,
  NotAFunction,
  SortError,
  UntypableKind,
  TypeMismatch,
  FuelExhausted,
  DuplicateName,
  NotASort,
  IllTypedSide,
  FvViolation,
  NonPatternLhs,
};

std::string_view to_string(ErrorKind kind);

class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace lpm::kernel
