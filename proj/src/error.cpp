#include "cstar/error.hpp"

namespace cstar {

const char* errName(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotAnEndomorphism: return "NotAnEndomorphism";
    case Err::NotElliptic: return "NotElliptic";
    case Err::NoSolution: return "NoSolution";
    case Err::NotInGamma: return "NotInGamma";
    case Err::InvalidOrder: return "InvalidOrder";
    case Err::EmptyStratum: return "EmptyStratum";
    case Err::DomainError: return "DomainError";
    case Err::ZeroDirection: return "ZeroDirection";
    case Err::EmptySample: return "EmptySample";
    case Err::ParseError: return "ParseError";
    case Err::UnknownName: return "UnknownName";
    case Err::DuplicateField: return "DuplicateField";
    case Err::NonSquarefreeD: return "NonSquarefreeD";
    case Err::IOError: return "IOError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace cstar
