#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trm {

enum class ErrorCode {
  PointNotInDomain,
  DegenerateInput,
  PointNotOnCircle,
  InvalidDomain,
  InvalidExponent,
  OriginNotAllowed,
  PreconditionFailed,
  UnsupportedDomain,
  BallNotContained,
  CollinearWithOrigin,
  InvalidDilatation,
  InvalidMetricValue,
  NonpositiveRadius,
  UnsupportedSuiteForDomain,
  UnknownProbe,
  InvalidConfig,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception; the C API maps
// code() onto trm_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures additionally carry the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::ParseError, message), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace trm
