#include "thinlab/error.hpp"

namespace thinlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kNotMonic: return "not_monic";
    case ErrorCode::kNotIntegral: return "not_integral";
    case ErrorCode::kImprimitive: return "imprimitive";
    case ErrorCode::kOffQuadric: return "off_quadric";
    case ErrorCode::kNotOrthogonal: return "not_orthogonal";
    case ErrorCode::kNotCartanRoot: return "not_cartan_root";
    case ErrorCode::kNotClosed: return "not_closed";
    case ErrorCode::kNotConverged: return "not_converged";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kSchemaViolation: return "schema_violation";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace thinlab
