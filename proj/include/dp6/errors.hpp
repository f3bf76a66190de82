#pragma once

#include <stdexcept>
#include <string>

namespace dp6 {

enum class Err {
  HomomorphismFailure,
  NotAGroup,
  ZeroDivisor,
  NotInvertible,
  NoPrimitiveElement,
  InvalidSubgroup,
  DegenerateFrame,
  Indeterminate,
  NotMonomial,
  DuplicateAlpha,
  DegenerateInput,
  NotGaloisStable,
  NotAnAction,
  NotQuadratic,
  NotTorusValued,
  InvalidCocycle,
  SolverExhausted,
  ParseError,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::HomomorphismFailure: return "HomomorphismFailure";
    case Err::NotAGroup: return "NotAGroup";
    case Err::ZeroDivisor: return "ZeroDivisor";
    case Err::NotInvertible: return "NotInvertible";
    case Err::NoPrimitiveElement: return "NoPrimitiveElement";
    case Err::InvalidSubgroup: return "InvalidSubgroup";
    case Err::DegenerateFrame: return "DegenerateFrame";
    case Err::Indeterminate: return "Indeterminate";
    case Err::NotMonomial: return "NotMonomial";
    case Err::DuplicateAlpha: return "DuplicateAlpha";
    case Err::DegenerateInput: return "DegenerateInput";
    case Err::NotGaloisStable: return "NotGaloisStable";
    case Err::NotAnAction: return "NotAnAction";
    case Err::NotQuadratic: return "NotQuadratic";
    case Err::NotTorusValued: return "NotTorusValued";
    case Err::InvalidCocycle: return "InvalidCocycle";
    case Err::SolverExhausted: return "SolverExhausted";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace dp6
