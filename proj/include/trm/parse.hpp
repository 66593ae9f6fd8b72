#pragma once

#include <string_view>

#include "trm/domain.hpp"
#include "trm/metrics.hpp"

namespace trm {

/// Parses complex literals such as "0.3+0.1i", "-2e-3-4i", "0.5", "0.3i",
/// "-i". Throws ParseError carrying the offset of the first bad character.
Point parse_point(std::string_view text);

/// Parses "disk", "halfplane", "punctured", "complement:<z0>" and
/// "polygon:<v1>;<v2>;..." (counterclockwise vertices).
Domain parse_domain(std::string_view text);

struct MetricSpec {
  Metric metric = Metric::S;
  double exponent = 2.0;  // Barrlund p
};

/// Parses "s", "jstar", "p", "barrlund:<p>", "low" or "rho".
MetricSpec parse_metric(std::string_view text);

}  // namespace trm
