#include "trm/conjecture.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "trm/detail/parallel.hpp"
#include "trm/error.hpp"
#include "trm/metrics.hpp"
#include "trm/rotations.hpp"
#include "trm/sampling.hpp"
#include "trm/suites.hpp"

namespace trm {

namespace {

constexpr std::array<std::string_view, 3> kStatements{
    "s(x2, y2) >= s(x0, y0)",
    "s(x3, y3) <= s(x1, y1) when x1 exists",
    "s(x3, y3) <= p(x, y)",
};

constexpr std::uint64_t kChunkSize = 1024;

struct ClaimAcc {
  std::uint64_t evaluated = 0;
  std::uint64_t counterexamples = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::uint64_t min_index = 0;
  Point min_x, min_y;
};

struct ChunkResult {
  std::array<ClaimAcc, 3> claims;
  std::vector<Counterexample> records;
};

std::string reproduce(const ConjectureConfig& config, std::uint64_t index) {
  return "trm explore-conjecture --samples " + std::to_string(config.samples) + " --seed " +
         std::to_string(config.seed) + " --tol " + shortest(config.tolerance) + " --index " +
         std::to_string(index) + " --format json";
}

}  // namespace

ConjectureReport conjecture_scan(const ConjectureConfig& config) {
  if (config.samples < 1) throw Error(ErrorCode::InvalidConfig, "samples must be at least 1");
  if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance)) {
    throw Error(ErrorCode::InvalidConfig, "tolerance must be a positive finite number");
  }
  if (config.only_index && *config.only_index >= config.samples) {
    throw Error(ErrorCode::InvalidConfig, "index must be smaller than samples");
  }

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t begin_index = config.only_index.value_or(0);
  const std::uint64_t total = config.only_index ? 1 : config.samples;
  std::vector<ChunkResult> chunks((total + kChunkSize - 1) / kChunkSize);

  detail::for_each_chunk(total, kChunkSize, config.threads, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
    ChunkResult& out = chunks[c];
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t index = begin_index + i;
      SampleStream stream(config.seed, index);
      const PointPair pair = sample_pair(UnitDisk{}, stream);
      const EuclideanBounds e = euclidean_bounds(pair.x, pair.y);
      const HyperbolicBounds h = hyperbolic_bounds(pair.x, pair.y);
      const double p = point_pair(UnitDisk{}, pair.x, pair.y).value;

      const auto record = [&](int claim, double lhs, double rhs) {
        ClaimAcc& acc = out.claims[static_cast<std::size_t>(claim - 1)];
        const double slack = rhs - lhs;
        ++acc.evaluated;
        if (slack < acc.min_slack) {
          acc.min_slack = slack;
          acc.min_index = index;
          acc.min_x = pair.x;
          acc.min_y = pair.y;
        }
        if (slack < -config.tolerance) {
          ++acc.counterexamples;
          out.records.push_back({index, claim, pair.x, pair.y, lhs, rhs, slack, reproduce(config, index)});
        }
      };
      record(1, e.lower, h.lower);
      if (e.upper) record(2, h.upper, *e.upper);
      record(3, h.upper, p);
    }
  });

  ConjectureReport report;
  report.samples = config.samples;
  report.seed = config.seed;
  report.tolerance = config.tolerance;
  report.only_index = config.only_index;
  report.sampling = sampling_description(UnitDisk{});
  std::array<ClaimAcc, 3> merged;
  for (const ChunkResult& chunk : chunks) {
    for (std::size_t k = 0; k < 3; ++k) {
      const ClaimAcc& from = chunk.claims[k];
      ClaimAcc& to = merged[k];
      to.evaluated += from.evaluated;
      to.counterexamples += from.counterexamples;
      if (from.min_slack < to.min_slack) {
        to.min_slack = from.min_slack;
        to.min_index = from.min_index;
        to.min_x = from.min_x;
        to.min_y = from.min_y;
      }
    }
    for (const Counterexample& r : chunk.records) {
      if (report.counterexamples.size() < kMaxViolationRecords) report.counterexamples.push_back(r);
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    ClaimSummary& claim = report.claims[k];
    claim.claim = static_cast<int>(k + 1);
    claim.statement = kStatements[k];
    claim.evaluated = merged[k].evaluated;
    claim.counterexamples = merged[k].counterexamples;
    if (claim.evaluated > 0) {
      claim.min_slack = merged[k].min_slack;
      claim.min_index = merged[k].min_index;
      claim.min_x = merged[k].min_x;
      claim.min_y = merged[k].min_y;
    }
    report.counterexample_count += claim.counterexamples;
  }
  report.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace trm
