#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trm/domain.hpp"

namespace trm {

/// Claims compared by the explorer, for disk pairs x, y:
///   1. s(x2, y2) >= s(x0, y0)
///   2. s(x3, y3) <= s(x1, y1), when the radial Euclidean position exists
///   3. s(x3, y3) <= p(x, y)
struct ClaimSummary {
  int claim = 0;
  std::string_view statement;
  std::uint64_t evaluated = 0;
  std::uint64_t counterexamples = 0;
  std::optional<double> min_slack;
  std::optional<std::uint64_t> min_index;
  Point min_x, min_y;
};

struct Counterexample {
  std::uint64_t index = 0;
  int claim = 0;
  Point x, y;
  double lhs = 0.0;  // the side claimed to be smaller
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  std::string reproduce;
};

struct ConjectureConfig {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::optional<std::uint64_t> only_index;
  unsigned threads = 0;
};

struct ConjectureReport {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::optional<std::uint64_t> only_index;
  std::string sampling;
  std::array<ClaimSummary, 3> claims;
  std::vector<Counterexample> counterexamples;  // first kMaxViolationRecords
  std::uint64_t counterexample_count = 0;
  double runtime_s = 0.0;

  bool found_counterexample() const noexcept { return counterexample_count > 0; }
};

/// Throws Error(InvalidConfig) for samples < 1, a bad tolerance or index.
ConjectureReport conjecture_scan(const ConjectureConfig& config);

}  // namespace trm
