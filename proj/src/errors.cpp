#include "symentropy/errors.hpp"

namespace symentropy {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kVertexSetMismatch: return "VertexSetMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kEmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kNonconvergence: return "NonconvergenceAfterMaxIters";
    case ErrorCode::kInfeasiblePoint: return "InfeasiblePoint";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotCompleteMultipartite: return "NotCompleteMultipartite";
    case ErrorCode::kIsolatedVertex: return "IsolatedVertex";
    case ErrorCode::kPartitionNotFound: return "PartitionNotFound";
    case ErrorCode::kNotPerfect: return "NotPerfect";
    case ErrorCode::kNotKGraph: return "NotKGraph";
    case ErrorCode::kKBelowThree: return "KBelowThree";
    case ErrorCode::kNotCubic: return "NotCubic";
    case ErrorCode::kHasBridge: return "HasBridge";
    case ErrorCode::kSumNotOne: return "SumNotOne";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace symentropy
