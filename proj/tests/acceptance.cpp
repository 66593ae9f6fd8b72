// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <regex>
#include <string>
#include <vector>

#include "trm/boundary.hpp"
#include "trm/conjecture.hpp"
#include "trm/detail/parallel.hpp"
#include "trm/holder.hpp"
#include "trm/metrics.hpp"
#include "trm/probes.hpp"
#include "trm/sampling.hpp"
#include "trm/suites.hpp"

using namespace trm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// Maximum of f(index) over [0, count), evaluated in parallel chunks.
double parallel_max(std::uint64_t count, const std::function<double(std::uint64_t)>& f) {
  constexpr std::uint64_t kChunk = 256;
  std::vector<double> best((count + kChunk - 1) / kChunk, -std::numeric_limits<double>::infinity());
  detail::for_each_chunk(count, kChunk, 0, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) best[c] = std::max(best[c], f(i));
  });
  return *std::max_element(best.begin(), best.end());
}

double relative(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Largest relative gap between s_metric and |x-y| / oracle over seeded pairs.
double oracle_gap(const Domain& domain, std::uint64_t count, std::uint64_t seed) {
  return parallel_max(count, [&](std::uint64_t i) {
    SampleStream stream(seed, i);
    const PointPair pair = sample_pair(domain, stream);
    const double s = s_metric(domain, pair.x, pair.y).value;
    const double oracle = std::abs(pair.x - pair.y) / oracle_boundary_infimum(domain, pair.x, pair.y, 8192);
    return relative(s, oracle);
  });
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  const double disk = oracle_gap(UnitDisk{}, 10000, 101);
  const double square = oracle_gap(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 1000, 102);
  const double half = oracle_gap(UpperHalfPlane{}, 1000, 103);
  const double elapsed = seconds_since(start);
  const double worst = std::max({disk, square, half});
  return {worst <= 1e-9 && elapsed < 30.0,
          fmt("max relative gap disk %.2e, square %.2e, half-plane %.2e; %.1f s", disk, square, half, elapsed)};
}

Outcome closed_form_fidelity() {
  const double collinear = parallel_max(10000, [](std::uint64_t i) {
    SampleStream stream(201, i);
    const double theta = stream.uniform(0.0, 2.0 * std::numbers::pi);
    const Point u = std::polar(1.0, theta);
    const Point x = stream.uniform(-1.0, 1.0) * 0.999999 * u;
    const Point y = stream.uniform(-1.0, 1.0) * 0.999999 * u;
    if (x == y) return 0.0;
    return relative(s_metric(UnitDisk{}, x, y).value, std::abs(x - y) / (2.0 - std::abs(x + y)));
  });

  const auto oracle_s = [](Point x, Point y) {
    return std::abs(x - y) / oracle_boundary_infimum(UnitDisk{}, x, y, 8192);
  };
  const double conjugate = parallel_max(2000, [&](std::uint64_t i) {
    SampleStream stream(202, i);
    const Point x = sample_in_disk(0.0, 0.999, stream);
    if (std::abs(x.imag()) < 1e-6) return 0.0;
    return std::abs(s_metric(UnitDisk{}, x, std::conj(x)).value - oracle_s(x, std::conj(x)));
  });
  const double named_a = std::abs(s_metric(UnitDisk{}, {0.2, 0.6}, {0.2, -0.6}).value - std::sqrt(0.4));
  const double named_b = std::abs(s_metric(UnitDisk{}, {0.6, 0.2}, {0.6, -0.2}).value - 0.2 / std::sqrt(0.2));
  const double named_oracle = std::max(std::abs(std::sqrt(0.4) - oracle_s({0.2, 0.6}, {0.2, -0.6})),
                                       std::abs(0.2 / std::sqrt(0.2) - oracle_s({0.6, 0.2}, {0.6, -0.2})));
  const bool pass = collinear <= 1e-14 && conjugate <= 1e-12 && std::max(named_a, named_b) <= 1e-12 &&
                    named_oracle <= 1e-12;
  return {pass, fmt("collinear max rel %.1e; conjugate vs oracle max %.1e; named pairs %.1e, %.1e (oracle %.1e)",
                    collinear, conjugate, named_a, named_b, named_oracle)};
}

Outcome run_clean(SuiteId suite, std::uint64_t samples) {
  SuiteConfig config;
  config.suite = suite;
  config.samples = samples;
  config.seed = 7;
  const SuiteReport r = run_suite(config);
  return {r.all_pass(), fmt("%s: %llu samples, %llu violations, min slack %.2e", std::string(to_string(suite)).c_str(),
                            static_cast<unsigned long long>(samples),
                            static_cast<unsigned long long>(r.violation_count), r.min_slack.value_or(0.0))};
}

Outcome metric_chain() { return run_clean(SuiteId::Chain, 100000); }

Outcome barrlund_constants() {
  constexpr std::uint64_t kPairs = 100000;
  struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  };
  constexpr std::uint64_t kChunk = 512;
  std::vector<std::array<Range, 3>> chunks((kPairs + kChunk - 1) / kChunk);
  detail::for_each_chunk(kPairs, kChunk, 0, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      SampleStream stream(301, i);
      const PointPair pair = sample_pair(UnitDisk{}, stream);
      const double b = barrlund(UnitDisk{}, 2.0, pair.x, pair.y).value;
      chunks[c][0].add(point_pair(UnitDisk{}, pair.x, pair.y).value / b);
      chunks[c][1].add(s_metric(UnitDisk{}, pair.x, pair.y).value / b);
      chunks[c][2].add(jstar(UnitDisk{}, pair.x, pair.y).value / b);
    }
  });
  std::array<Range, 3> all;
  for (const auto& chunk : chunks) {
    for (int k = 0; k < 3; ++k) {
      all[k].add(chunk[k].lo);
      all[k].add(chunk[k].hi);
    }
  }
  const double limit = (std::sqrt(10.0) + std::sqrt(2.0)) / 4.0;
  const double h = (std::sqrt(5.0) - 1.0) / 2.0;
  const double witness = point_pair(UnitDisk{}, h, -h).value / barrlund(UnitDisk{}, 2.0, h, -h).value;
  const bool pass = all[0].hi <= limit + 1e-9 && std::abs(witness - limit) <= 1e-9 &&
                    all[1].lo >= 1.0 / std::sqrt(2.0) - 1e-9 && all[1].hi <= 1.0 + 1e-9 &&
                    all[2].lo >= 0.5 - 1e-9 && all[2].hi <= 1.0 + 1e-9;
  return {pass, fmt("max p/b %.10f (limit %.10f, witness %.10f); s/b in [%.6f, %.6f]; j*/b in [%.6f, %.6f]",
                    all[0].hi, limit, witness, all[1].lo, all[1].hi, all[2].lo, all[2].hi)};
}

Outcome sharpness_probes() {
  const auto start = Clock::now();
  const std::array eps{1e-6};
  double worst = 0.0;
  std::string worst_id;
  for (const ProbeInfo& info : probe_catalog()) {
    const ProbeTable table = sharpness_probe(info.id, eps);
    const double gap = std::abs(table.rows.front().gap);
    if (gap >= worst) {
      worst = gap;
      worst_id = std::string(info.id);
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-4 && elapsed < 5.0,
          fmt("%zu probes, largest |gap| %.2e (%s); %.2f s", probe_catalog().size(), worst, worst_id.c_str(), elapsed)};
}

Outcome rotation_sandwiches() {
  const Outcome e = run_clean(SuiteId::RotationEuclidean, 100000);
  const Outcome h = run_clean(SuiteId::RotationHyperbolic, 100000);
  return {e.pass && h.pass, e.detail + "; " + h.detail};
}

Outcome ball_diameter() {
  double sup_excess = -std::numeric_limits<double>::infinity();
  double attained_gap = 0.0;
  for (std::uint64_t b = 0; b < 100; ++b) {
    SampleStream stream(401, b);
    const Point c = sample_in_disk(0.0, 0.99, stream);
    const double r = stream.uniform(0.01, 0.95) * (1.0 - std::abs(c));
    const double diameter = r / (1.0 - std::abs(c));
    const double sup = parallel_max(1000, [&](std::uint64_t i) {
      SampleStream pair_stream(402 + b, i);
      const Point x = sample_in_disk(c, r, pair_stream);
      const Point y = sample_in_disk(c, r, pair_stream);
      return x == y ? 0.0 : s_metric(UnitDisk{}, x, y).value;
    });
    sup_excess = std::max(sup_excess, sup - diameter);
    const Point u = std::abs(c) > 0.0 ? c / std::abs(c) : Point(1.0, 0.0);
    attained_gap = std::max(attained_gap, std::abs(s_metric(UnitDisk{}, c - r * u, c + r * u).value - diameter));
  }
  return {sup_excess <= 1e-9 && attained_gap <= 1e-9,
          fmt("100 balls: max (sup s - r/(1-|c|)) %.2e; radial pair gap %.2e", sup_excess, attained_gap)};
}

Outcome holder_validity() {
  // Largest excess of |f(x)-f(y)| over the reported bounds for one map family.
  const auto excess = [](std::uint64_t seed, auto make_map) {
    return parallel_max(10000, [&](std::uint64_t i) {
      SampleStream stream(seed, i);
      const PointPair pair = sample_pair(UnitDisk{}, stream);
      const TestMap map = make_map(stream);
      const double moved = std::abs(apply_test_map(map, pair.x) - apply_test_map(map, pair.y));
      const HolderReport r = holder_variants(pair.x, pair.y, dilatation(map));
      double bound = std::min({r.thm_main, r.cor_p, r.cor_collinear, r.cor_hyp, r.best});
      if (r.cor_unit) bound = std::min(bound, *r.cor_unit);
      return moved - bound;
    });
  };
  const double mobius = excess(501, [](SampleStream& s) {
    return TestMap{MobiusAutomorphism{sample_in_disk(0.0, 0.95, s), s.uniform(0.0, 2.0 * std::numbers::pi)}};
  });
  double radial = -std::numeric_limits<double>::infinity();
  for (const double K : {1.0, 2.0, 4.0}) {
    radial = std::max(radial, excess(502 + static_cast<std::uint64_t>(K), [K](SampleStream&) {
                        return TestMap{RadialStretch{K}};
                      }));
  }
  const HolderReport inner = holder_variants(0.3, Point(0, 0.3), 2.0);
  const HolderReport outer = holder_variants(0.9, Point(0, 0.9), 2.0);
  const bool flip = inner.cor_collinear < inner.cor_p && outer.cor_p < outer.cor_collinear;
  return {mobius <= 1e-12 && radial <= 1e-12 && flip,
          fmt("max excess Mobius %.2e, radial %.2e; K=2 collinear-p comparison %+.4f at (0.3,0.3i), %+.4f at "
              "(0.9,0.9i)",
              mobius, radial, inner.cor_collinear - inner.cor_p, outer.cor_collinear - outer.cor_p)};
}

Outcome conjecture_explorer() {
  ConjectureConfig config;
  config.samples = 1000000;
  config.seed = 7;
  const auto start = Clock::now();
  const ConjectureReport r = conjecture_scan(config);
  const double elapsed = seconds_since(start);
  bool complete = true;
  std::string slacks;
  for (const ClaimSummary& c : r.claims) {
    complete = complete && c.min_slack.has_value() && c.evaluated > 0;
    slacks += fmt(" claim %d %.2e;", c.claim, c.min_slack.value_or(NAN));
  }
  const bool records_complete = r.counterexamples.size() == std::min<std::uint64_t>(r.counterexample_count, kMaxViolationRecords);
  return {complete && records_complete && elapsed < 120.0,
          fmt("1e6 samples in %.1f s, %llu counterexamples; min slack%s", elapsed,
              static_cast<unsigned long long>(r.counterexample_count), slacks.c_str())};
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[65536];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

Outcome determinism() {
  const std::string command =
      std::string(TRM_CLI_PATH) + " verify --suite all --samples 100000 --seed 7 --format json";
  int first_status = 0;
  int second_status = 0;
  const std::string first = capture(command, first_status);
  const std::string second = capture(command, second_status);
  const std::regex runtime(R"("runtime_s": *[-+0-9.eE]+)");
  const std::string a = std::regex_replace(first, runtime, "\"runtime_s\": 0");
  const std::string b = std::regex_replace(second, runtime, "\"runtime_s\": 0");
  const bool pass = first_status == 0 && second_status == 0 && !a.empty() && a == b;
  return {pass, fmt("two CLI runs, %zu bytes each, identical after masking runtime_s: %s", a.size(),
                    a == b ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"oracle equivalence", oracle_equivalence},
      {"closed-form fidelity", closed_form_fidelity},
      {"metric chain suite", metric_chain},
      {"Barrlund constants", barrlund_constants},
      {"sharpness probes", sharpness_probes},
      {"rotation sandwiches", rotation_sandwiches},
      {"ball diameter", ball_diameter},
      {"Holder validity", holder_validity},
      {"conjecture explorer", conjecture_explorer},
      {"determinism", determinism},
  };
  int failed = 0;
  int number = 0;
  for (const Criterion& c : criteria) {
    ++number;
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::printf("%s %2d %s: %s\n", outcome.pass ? "PASS" : "FAIL", number, c.name, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", number - failed, number);
  return failed == 0 ? 0 : 1;
}
