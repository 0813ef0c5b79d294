#pragma once

#include <stdexcept>
#include <string>

namespace gsv {

// Construction-time failures carry a machine-readable code plus a witness text.
enum class Errc {
  NotAssociative,
  NoIdentity,
  NoInverse,
  OrderBoundExceeded,
  NotAnAction,
  SizeBoundExceeded,
  NotCrossed,
  NotEquivariant,
  IncompatibleFunctors,
  NotWellDefined,
  ChainTypeMismatch,
  ConfigInvalid,
  IndexOutOfRange,
  NotComonadMorphism,
  NotCoalgebraMorphism,
  ParseError,
  UnresolvedReference,
  EquivarianceDeclarationFailed,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::OrderBoundExceeded: return "OrderBoundExceeded";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::SizeBoundExceeded: return "SizeBoundExceeded";
    case Errc::NotCrossed: return "NotCrossed";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::IncompatibleFunctors: return "IncompatibleFunctors";
    case Errc::NotWellDefined: return "NotWellDefined";
    case Errc::ChainTypeMismatch: return "ChainTypeMismatch";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotComonadMorphism: return "NotComonadMorphism";
    case Errc::NotCoalgebraMorphism: return "NotCoalgebraMorphism";
    case Errc::ParseError: return "ParseError";
    case Errc::UnresolvedReference: return "UnresolvedReference";
    case Errc::EquivarianceDeclarationFailed: return "EquivarianceDeclarationFailed";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace gsv
