#pragma once

#include <stdexcept>
#include <string>

namespace tropmod {

enum class Errc {
  NotSimple,
  NotConnected,
  MissingEdge23,
  BadLabelRange,
  BoundExceeded,
  InvalidFamily,
  PairNotInFrame,
  UnstableDivisor,
  ZeroVector,
  NotAFacet,
  NotPure,
  IdenticallyZeroCoordinate,
  NotGammaOpen,
  AmbiguousSplit,
  MalformedMonomial,
  UnstableTree,
  DimensionTooLarge,
  ParseError,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotConnected: return "NotConnected";
    case Errc::MissingEdge23: return "MissingEdge23";
    case Errc::BadLabelRange: return "BadLabelRange";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::InvalidFamily: return "InvalidFamily";
    case Errc::PairNotInFrame: return "PairNotInFrame";
    case Errc::UnstableDivisor: return "UnstableDivisor";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotAFacet: return "NotAFacet";
    case Errc::NotPure: return "NotPure";
    case Errc::IdenticallyZeroCoordinate: return "IdenticallyZeroCoordinate";
    case Errc::NotGammaOpen: return "NotGammaOpen";
    case Errc::AmbiguousSplit: return "AmbiguousSplit";
    case Errc::MalformedMonomial: return "MalformedMonomial";
    case Errc::UnstableTree: return "UnstableTree";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

// Single exception type so the CLI can map every failure to a stable
// machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tropmod
