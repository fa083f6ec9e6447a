#pragma once

#include <ostream>

namespace meinardus::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInput = 2;      // ParseError, ValidationError, UnknownModel, InvalidArgument
inline constexpr int kModel = 3;      // model cannot support the request (MissingProfile, NoPositiveMass, ...)
inline constexpr int kNumerical = 4;  // precision, truncation, quadrature, convergence failures
inline constexpr int kIo = 5;         // output file could not be written

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace meinardus::cli
