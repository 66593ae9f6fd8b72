#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trm/conjecture.hpp"
#include "trm/domain.hpp"
#include "trm/parse.hpp"
#include "trm/probes.hpp"
#include "trm/suites.hpp"

namespace trm {

enum class Format { Text, Json, Csv };

/// Accepts "text", "json" and "csv". Throws Error(InvalidConfig).
Format parse_format(std::string_view text);

/// Version of the JSON layout, written as the top-level "schema" field.
inline constexpr int kReportSchema = 1;

std::string render(const std::vector<SuiteReport>& reports, Format format);
std::string render(const ProbeTable& table, Format format);
std::string render(const ConjectureReport& report, Format format);

enum class RotationMode { Euclidean, Hyperbolic };

/// Accepts "euclidean" and "hyperbolic". Throws Error(InvalidConfig).
RotationMode parse_rotation_mode(std::string_view text);

/// Single-pair queries: evaluate and render in one step.
std::string dist_report(const Domain& domain, const MetricSpec& metric, Point x, Point y, Format format);
/// Unit disk only: every lower and upper estimate of s next to s itself.
std::string bounds_report(Point x, Point y, Format format);
std::string rotate_report(Point x, Point y, RotationMode mode, Format format);
std::string holder_report(Point x, Point y, double K, std::optional<double> r, Format format);

/// Column layout of every CSV output, for the CLI help text.
std::string_view csv_layouts() noexcept;

}  // namespace trm
