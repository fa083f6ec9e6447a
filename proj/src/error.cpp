#include "meinardus/error.hpp"

namespace meinardus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::UnknownModel: return "UnknownModel";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::NotConvergent: return "NotConvergent";
    case ErrorKind::MissingDeltaCoeffs: return "MissingDeltaCoeffs";
    case ErrorKind::UnsupportedForm: return "UnsupportedForm";
    case ErrorKind::TruncationTooShallow: return "TruncationTooShallow";
    case ErrorKind::NoPositiveMass: return "NoPositiveMass";
    case ErrorKind::MissingProfile: return "MissingProfile";
    case ErrorKind::Unstabilized: return "Unstabilized";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SeriesDivergence: return "SeriesDivergence";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace meinardus
