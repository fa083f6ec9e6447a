#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace meinardus {

enum class ErrorKind {
  NonUnitConstantTerm,
  PrecisionExhausted,
  UnknownModel,
  ParseError,
  ValidationError,
  PoleAtOne,
  NotConvergent,
  MissingDeltaCoeffs,
  UnsupportedForm,
  TruncationTooShallow,
  NoPositiveMass,
  MissingProfile,
  Unstabilized,
  OutOfRange,
  SeriesDivergence,
  QuadratureNotConverged,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; the kind
// tells callers (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace meinardus
