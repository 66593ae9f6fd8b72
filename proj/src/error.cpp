#include "trm/error.hpp"

namespace trm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PointNotInDomain: return "PointNotInDomain";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::PointNotOnCircle: return "PointNotOnCircle";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::OriginNotAllowed: return "OriginNotAllowed";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UnsupportedDomain: return "UnsupportedDomain";
    case ErrorCode::BallNotContained: return "BallNotContained";
    case ErrorCode::CollinearWithOrigin: return "CollinearWithOrigin";
    case ErrorCode::InvalidDilatation: return "InvalidDilatation";
    case ErrorCode::InvalidMetricValue: return "InvalidMetricValue";
    case ErrorCode::NonpositiveRadius: return "NonpositiveRadius";
    case ErrorCode::UnsupportedSuiteForDomain: return "UnsupportedSuiteForDomain";
    case ErrorCode::UnknownProbe: return "UnknownProbe";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace trm
