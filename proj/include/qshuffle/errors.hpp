#pragma once

#include <stdexcept>
#include <string>

namespace qshuffle {

// Every failure raised by the engine carries a kind so that front ends can map
// it onto an exit status without parsing messages.
enum class ErrorKind {
  NotAntisymmetric,
  NotReduced,
  WrongLength,
  UnsupportedType,
  CalibrationFailure,
  LeadingWordMismatch,
  NotGoodWord,
  NotInSpan,
  NotInImage,
  TriangularityViolation,
  NonConvergence,
  CacheCorrupt,
  BudgetExceeded,
  PreconditionViolated,
  AmbiguousExtreme,
  WrongType,
  NonDefaultOrder,
  SegmentTooLong,
  InexactDivision,
  InvalidArgument,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Convention/engine failures as opposed to bad input.
  bool is_engine_error() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace qshuffle
