#pragma once

#include <stdexcept>
#include <string>

namespace tense {

// Every domain failure carries a machine-checkable kind plus a human message.
enum class ErrorKind {
  CycleError,       // antisymmetry violated after closure
  NoBottom,         // empty join does not exist
  NoJoin,           // a pair of elements has no least upper bound
  ForeignElement,   // element index outside its carrier
  EmptyNodeSet,     // power over an empty node set
  CarrierMismatch,  // map applied across non-matching carriers
  UnknownNode,      // frame node label not declared
  DuplicateLabel,   // repeated element/node label
  CarrierTooLarge,  // materialized carrier would exceed the configured cap
  NotAJoinHom,      // candidate map fails join preservation
  NotLax,           // candidate operator/morphism fails the lax inequality
  NotConstantOnX,   // factorization precondition g(c)=g(d) fails
  FiberConflict,    // factorized map not constant on nucleus fibers
  NotACongruence,   // partition fails the join-closure test
  LawViolation,     // a verified-at-build law failed (reportable falsification)
  ParseError,       // malformed structure file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::NoBottom: return "NoBottom";
    case ErrorKind::NoJoin: return "NoJoin";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::EmptyNodeSet: return "EmptyNodeSet";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::NotAJoinHom: return "NotAJoinHom";
    case ErrorKind::NotLax: return "NotLax";
    case ErrorKind::NotConstantOnX: return "NotConstantOnX";
    case ErrorKind::FiberConflict: return "FiberConflict";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace tense
