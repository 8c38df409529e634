#include "dioph/error.hpp"

namespace dioph {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::BoundaryUndecidable: return "BoundaryUndecidable";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::InconsistentRep: return "InconsistentRep";
    case ErrorCode::RootsIncomplete: return "RootsIncomplete";
    case ErrorCode::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::UndecidableTie: return "UndecidableTie";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::FactorizationCap: return "FactorizationCap";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RootClusterFailed: return "RootClusterFailed";
    case ErrorCode::PrimeDividesD: return "PrimeDividesD";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::Equal: return "Equal";
    case ErrorCode::NoRankDrop: return "NoRankDrop";
    case ErrorCode::HardAssertion: return "HardAssertion";
  }
  return "Unknown";
}

}  // namespace dioph
