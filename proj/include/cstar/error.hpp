#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

// Every way an analysis can fail, in one place.  Library code throws Error
// with a kind; the CLI maps kinds to exit codes (input problems -> 1,
// internal inconsistencies -> 2).
enum class Err {
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  NotAnEndomorphism,
  NotElliptic,
  NoSolution,
  NotInGamma,
  InvalidOrder,
  EmptyStratum,
  DomainError,
  ZeroDirection,
  EmptySample,
  ParseError,
  UnknownName,
  DuplicateField,
  NonSquarefreeD,
  IOError,
  Internal,
};

const char* errName(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& what)
      : std::runtime_error(std::string(errName(kind)) + ": " + what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cstar
