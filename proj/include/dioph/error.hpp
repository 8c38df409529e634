#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

enum class ErrorCode {
  InvalidArgument,
  ZeroInput,
  ZeroPolynomial,
  ZeroVector,
  DegreeTooSmall,
  DegreeCapExceeded,
  DegreeOverflow,
  BoundaryUndecidable,
  PrecisionExhausted,
  RankDeficient,
  InconsistentRep,
  RootsIncomplete,
  NonIntegerCoefficients,
  DimensionCap,
  UndecidableTie,
  PreconditionFailed,
  CounterexampleFound,
  SearchExhausted,
  NotCoprime,
  FactorizationCap,
  CapExceeded,
  RootClusterFailed,
  PrimeDividesD,
  Reducible,
  Equal,
  NoRankDrop,
  // A proved inequality failed to verify. Always an implementation bug.
  HardAssertion,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dioph
