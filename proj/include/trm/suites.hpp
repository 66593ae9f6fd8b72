#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trm/domain.hpp"

namespace trm {

enum class SuiteId { Chain, Barrlund, Low, RotationEuclidean, RotationHyperbolic, Holder };

inline constexpr std::array kAllSuites{SuiteId::Chain,
                                       SuiteId::Barrlund,
                                       SuiteId::Low,
                                       SuiteId::RotationEuclidean,
                                       SuiteId::RotationHyperbolic,
                                       SuiteId::Holder};

std::string_view to_string(SuiteId suite) noexcept;

/// Accepts the names printed by to_string. Throws Error(InvalidConfig).
SuiteId parse_suite(std::string_view name);

/// An inequality or identity stated for the metrics, rotations or holder module.
struct Invariant {
  std::string_view id;
  std::string_view module;
  std::string_view statement;
};

std::span<const Invariant> invariant_catalog() noexcept;

/// One numeric check evaluated per sample. Its slack is >= 0 when the
/// inequality holds; equality checks report -|difference|.
struct CheckSpec {
  std::string_view id;
  std::string_view invariant;
  SuiteId suite;
  std::string_view statement;
  /// Tolerance used instead of the configured one; 0 means "configured".
  double fixed_tolerance = 0.0;
  /// Monitored checks are reported but never count as violations.
  bool monitored = false;
};

std::span<const CheckSpec> check_registry() noexcept;

struct SuiteConfig {
  /// Empty runs every suite.
  std::optional<SuiteId> suite;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  /// Defaults to the unit disk (punctured disk for the low suite).
  std::optional<Domain> domain;
  /// Evaluate only this sample index, e.g. to replay a violation.
  std::optional<std::uint64_t> only_index;
  /// 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

struct ViolationRecord {
  std::uint64_t index = 0;
  Point x, y;
  std::string check;
  double slack = 0.0;
  /// CLI invocation that replays exactly this sample.
  std::string reproduce;
};

struct CheckSummary {
  const CheckSpec* spec = nullptr;
  double tolerance = 0.0;
  std::uint64_t evaluated = 0;
  std::uint64_t violations = 0;
  /// Slack in [-tolerance, 0): rounding noise, logged but not failed.
  std::uint64_t noise = 0;
  std::optional<double> min_slack;
  std::optional<std::uint64_t> min_index;
};

/// Violation records kept per report; the count is always exact.
inline constexpr std::size_t kMaxViolationRecords = 100;

struct SuiteReport {
  SuiteId suite = SuiteId::Chain;
  Domain domain;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::optional<std::uint64_t> only_index;
  std::string sampling;
  std::vector<CheckSummary> checks;
  std::vector<ViolationRecord> violations;
  std::uint64_t violation_count = 0;
  /// Minimum slack over the non-monitored checks.
  std::optional<double> min_slack;
  std::string ratio_label;
  std::optional<double> max_ratio;
  std::optional<std::uint64_t> max_ratio_index;
  double runtime_s = 0.0;

  bool all_pass() const noexcept { return violation_count == 0; }
};

/// Runs one suite; config.suite must be set.
SuiteReport run_suite(const SuiteConfig& config);

/// Runs config.suite, or every suite in kAllSuites order when it is empty.
std::vector<SuiteReport> run_suites(const SuiteConfig& config);

/// Shortest round-trip text for a double, used in replay commands.
std::string shortest(double v);

}  // namespace trm
