#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace pentagram {

enum class ErrorKind {
  DegenerateInput,
  GcdObstruction,
  InconsistentLift,
  DegenerateOutput,
  DegenerateSpan,
  DegenerateIntersection,
  NotCollinear,
  CoincidentPoints,
  DivisionByZero,
  SingularStep,
  SingularMatrix,
  UnexpectedSupport,
  NonGeneric,
  StiffnessFailure,
  KernelDimensionError,
  PoorConditioning,
  IllConditioned,
  IrrationalRoot,
  ConfigError,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<long> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<long> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<long> index_;
};

}  // namespace pentagram
