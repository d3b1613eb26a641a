#include "pentagram/error.hpp"

namespace pentagram {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::GcdObstruction: return "GcdObstruction";
    case ErrorKind::InconsistentLift: return "InconsistentLift";
    case ErrorKind::DegenerateOutput: return "DegenerateOutput";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorKind::NotCollinear: return "NotCollinear";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SingularStep: return "SingularStep";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::UnexpectedSupport: return "UnexpectedSupport";
    case ErrorKind::NonGeneric: return "NonGeneric";
    case ErrorKind::StiffnessFailure: return "StiffnessFailure";
    case ErrorKind::KernelDimensionError: return "KernelDimensionError";
    case ErrorKind::PoorConditioning: return "PoorConditioning";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::IrrationalRoot: return "IrrationalRoot";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string format(ErrorKind kind, const std::string& what, std::optional<long> index) {
  std::string out = std::string(to_string(kind)) + ": " + what;
  if (index) out += " (index " + std::to_string(*index) + ")";
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& what, std::optional<long> index)
    : std::runtime_error(format(kind, what, index)), kind_(kind), index_(index) {}

}  // namespace pentagram
