#pragma once

#include <stdexcept>
#include <string>

namespace polysurf {

enum class ErrorCode {
    NotCoplanar,
    Degenerate,
    NotSimple,
    MapsToInfinity,
    SingularTransform,
    InvalidSurface,
    EpsTooLarge,
    NotACorner,
    NotASide,
    NoSecondPolygon,
    DeltaInfeasible,
    NotPlanar,
    TooFewEdges,
    PatternTooLarge,
    CoordinateDerivationFailed,
    BadInput,
    Io,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace polysurf
