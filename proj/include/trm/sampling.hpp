#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "trm/domain.hpp"

namespace trm {

/// Share of sampled points replaced by near-boundary stress points.
inline constexpr double kStressRate = 0.1;
/// Distance band (log-uniform) of stress points from the boundary.
inline constexpr double kStressNear = 1e-8;
inline constexpr double kStressFar = 1e-3;
/// Pairs closer than this are redrawn.
inline constexpr double kMinPairDistance = 1e-9;

/// Random stream owned by one sample. Seeded from (seed, index) alone, so a
/// sample draws the same numbers regardless of how work is split across
/// threads and can be replayed in isolation.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index);

  /// Uniform in [0, 1) with 53 random bits; identical on every platform.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// exp of a uniform draw on [log lo, log hi).
  double log_uniform(double lo, double hi);
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

struct PointPair {
  Point x, y;
};

/// Interior point: uniform over the disk (or a bounded window of unbounded
/// domains), replaced with probability kStressRate by a point within
/// [kStressNear, kStressFar) of the boundary.
Point sample_point(const Domain& domain, SampleStream& stream);

PointPair sample_pair(const Domain& domain, SampleStream& stream);

/// Uniform point in the open disk B(center, radius).
Point sample_in_disk(Point center, double radius, SampleStream& stream);

/// One-line description of the sampling measure, recorded in reports.
std::string sampling_description(const Domain& domain);

}  // namespace trm
