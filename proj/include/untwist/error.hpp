#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace untwist {

enum class ErrorCode {
  NotSquare,
  OddDimension,
  NonUnimodularIntersection,
  NotSymplectic,
  DimensionMismatch,
  NotUnimodular,
  NonPrimeModulus,
  UnsupportedModulus,
  FieldMismatch,
  NotSymmetric,
  IndexOutOfRange,
  SelfSlide,
  SlideOverLinkComponent,
  NonUnitFraming,
  NotSurgeryComponent,
  InvalidSign,
  TraceMismatch,
  MalformedJson,
  SchemaViolation,
  UnknownCatalogEntry,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Domain error. `cause` differs from `code` when one error wraps another,
/// e.g. a schema violation raised because the matrix failed validation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : Error(code, code, message) {}
  Error(ErrorCode code, ErrorCode cause, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        cause_(cause) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCode cause() const noexcept { return cause_; }

 private:
  ErrorCode code_;
  ErrorCode cause_;
};

}  // namespace untwist
