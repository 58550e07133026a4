#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibsg {

enum class ErrorKind {
  EmptyGenerators,
  ZeroGenerator,
  NotCoprime,
  PivotZero,
  PivotNotInSemigroup,
  ResourceLimit,
  TableTooLarge,
  EnumerationTooLarge,
  InvalidRange,
  PreconditionViolation,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::PivotZero: return "PivotZero";
    case ErrorKind::PivotNotInSemigroup: return "PivotNotInSemigroup";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::TableTooLarge: return "TableTooLarge";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
  }
  return "Unknown";
}

/// Every recoverable failure in the library carries one of the kinds above,
/// so callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  bool is_resource_limit() const noexcept {
    return kind_ == ErrorKind::ResourceLimit || kind_ == ErrorKind::TableTooLarge ||
           kind_ == ErrorKind::EnumerationTooLarge;
  }

 private:
  ErrorKind kind_;
};

}  // namespace fibsg
