#include "cellkit/error.hpp"

namespace cellkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGenerator: return "invalid-generator";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::RankMismatch: return "rank-mismatch";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::ParityMismatch: return "parity-mismatch";
    case ErrorCode::NotSymbolPartition: return "not-a-symbol-partition";
    case ErrorCode::KindMismatch: return "kind-mismatch";
    case ErrorCode::DivisionNotExact: return "division-not-exact";
    case ErrorCode::ConventionFailure: return "convention-failure";
    case ErrorCode::Parse: return "parse-error";
  }
  return "unknown";
}

}  // namespace cellkit
