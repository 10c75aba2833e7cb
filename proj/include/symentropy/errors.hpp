#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symentropy {

enum class ErrorCode {
  kVertexSetMismatch,
  kEmptyInput,
  kEmptyEdgeSet,
  kUnknownVertex,
  kNotBipartite,
  kSizeLimitExceeded,
  kDomainError,
  kNonconvergence,
  kInfeasiblePoint,
  kDimensionMismatch,
  kNotCompleteMultipartite,
  kIsolatedVertex,
  kPartitionNotFound,
  kNotPerfect,
  kNotKGraph,
  kKBelowThree,
  kNotCubic,
  kHasBridge,
  kSumNotOne,
  kNegativeEntry,
  kParseError,
  kInvariantViolation,
};

std::string_view to_string(ErrorCode code);

// Base of every error thrown by the library. The code is what callers
// (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

// Checked invariant; violations are reported as kInvariantViolation.
inline void ensure(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::kInvariantViolation, what);
}

}  // namespace symentropy
