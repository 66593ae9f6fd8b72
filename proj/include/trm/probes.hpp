#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "trm/domain.hpp"

namespace trm {

struct ProbeInfo {
  std::string_view id;
  std::string_view ratio;  // e.g. "s/b2"
  std::string_view family;
};

std::span<const ProbeInfo> probe_catalog() noexcept;

struct ProbeRow {
  double eps = 0.0;
  Point x, y;
  double ratio = 0.0;
  double claimed_limit = 0.0;
  double gap = 0.0;  // ratio - claimed_limit
};

struct ProbeTable {
  const ProbeInfo* info = nullptr;
  std::vector<ProbeRow> rows;
};

/// Evaluates the witness family of a sharpness limit at each eps.
/// Throws Error(UnknownProbe) or Error(InvalidConfig) for eps outside (0, 1/2).
ProbeTable sharpness_probe(std::string_view probe_id, std::span<const double> eps);

}  // namespace trm
