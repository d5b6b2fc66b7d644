#pragma once

#include <stdexcept>
#include <string>

namespace acx {

enum class Errc {
  IndexOutOfRange,
  InvalidFrame,
  NonBeltramiInput,
  TypeLeak,
  RankMismatch,
  SingularTransition,
  MCViolation,
  PreconditionViolation,
  InducedMapIllDefined,
  ParseError,
  RangeError,
  RationalError,
  IoError,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidFrame: return "InvalidFrame";
    case Errc::NonBeltramiInput: return "NonBeltramiInput";
    case Errc::TypeLeak: return "TypeLeak";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::SingularTransition: return "SingularTransition";
    case Errc::MCViolation: return "MCViolation";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::InducedMapIllDefined: return "InducedMapIllDefined";
    case Errc::ParseError: return "ParseError";
    case Errc::RangeError: return "RangeError";
    case Errc::RationalError: return "RationalError";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace acx
