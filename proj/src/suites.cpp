#include "trm/suites.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "trm/detail/parallel.hpp"
#include "trm/error.hpp"
#include "trm/holder.hpp"
#include "trm/hyperbolic.hpp"
#include "trm/metrics.hpp"
#include "trm/rotations.hpp"
#include "trm/sampling.hpp"

namespace trm {

namespace {

constexpr std::array kInvariants{
    Invariant{"M1", "metrics", "th(rho/4) <= j* <= s <= p <= th(rho/2) <= 2 th(rho/4) in the unit disk"},
    Invariant{"M2", "metrics", "s <= b_p <= 2^(1-1/p) s for p in {1, 2, 3}"},
    Invariant{"M3", "metrics",
              "unit disk: b/sqrt2 <= s <= b, b/2 <= j* <= b, b/sqrt2 <= p <= (sqrt10+sqrt2)/4 b with b = b_2"},
    Invariant{"M4", "metrics", "s >= low on the punctured disk"},
    Invariant{"M5", "metrics", "low <= sqrt2 j*, low <= p, low <= b_2"},
    Invariant{"M6", "metrics", "s/low <= (1+r)/(2r) whenever max(|x|,|y|) >= r"},
    Invariant{"M7", "metrics", "th(rho/2) >= low"},
    Invariant{"M8", "metrics", "low(0.3,-0.1) > low(0.3,0.1) + low(0.1,-0.1)"},
    Invariant{"M9", "metrics", "s(x, x+t u) is non-decreasing in t"},
    Invariant{"M10", "metrics", "s(x,y) <= max(|x|,|y|)"},
    Invariant{"M11", "metrics", "sup of s over a ball B(c,r) in the disk is r/(1-|c|), attained by the radial pair"},
    Invariant{"R1", "rotations", "s(x0,y0) <= s(x,y) <= s(x1,y1) when |k|+r < 1"},
    Invariant{"R2", "rotations", "s(x2,y2) <= s(x,y) <= (1+|q|)t/(1+|q|t^2)"},
    Invariant{"R3", "rotations", "|x2-y2| <= |x-y| <= |x3-y3|"},
    Invariant{"R4", "rotations", "|x-y| <= 2(1-|q|^2)t/(1-|q|^2 t^2) <= 2t"},
    Invariant{"R5", "rotations", "t(1+|q|)/sqrt((1+t^2)(1+|q|^2t^2)) <= sqrt((|q|^2+t^2)/(1+|q|^2t^2))"},
    Invariant{"R6", "rotations", "rotations keep the Euclidean midpoint k and the hyperbolic midpoint q"},
    Invariant{"R7", "rotations", "chord quotient |x-y|/(|x-z|+|z-y|) decreases as the chord through k turns from 0 to pi/2"},
    Invariant{"H1", "holder", "Mobius automorphisms satisfy |f(x)-f(y)| <= every bound with K = 1"},
    Invariant{"H2", "holder", "radial stretches with K in {1, 2, 4} satisfy |f(x)-f(y)| <= every bound"},
    Invariant{"H3", "holder", "the main bound never exceeds any corollary bound"},
    Invariant{"H4", "holder", "the hyperbolic-rotation bound never exceeds the point pair and collinear bounds (monitored)"},
};

enum Check : std::size_t {
  kChainQuarterLeJstar,
  kChainJstarLeS,
  kChainSLeP,
  kChainPLeHalf,
  kChainHalfLeTwiceQuarter,
  kChainRayMonotone,
  kChainSLeMaxModulus,
  kChainBallSup,
  kChainBallAttained,
  kBarrlundSLeB1,
  kBarrlundB1LeScaled,
  kBarrlundSLeB2,
  kBarrlundB2LeScaled,
  kBarrlundSLeB3,
  kBarrlundB3LeScaled,
  kBarrlundSGeB,
  kBarrlundJstarGeB,
  kBarrlundJstarLeB,
  kBarrlundPGeB,
  kBarrlundPLeB,
  kLowSGeLow,
  kLowLeJstar,
  kLowLeP,
  kLowLeB,
  kLowQuotientCap,
  kLowLeHalfRho,
  kLowTriangleFailure,
  kEucClosedLeLower,
  kEucLowerLeS,
  kEucSLeUpper,
  kEucSLeCollinear,
  kEucMidpoint,
  kEucQuotientDecreasing,
  kHypLowerLeS,
  kHypSLeUpper,
  kHypBoundsMatch,
  kHypChordLower,
  kHypChordUpper,
  kHypChordBound,
  kHypChordBoundTwoT,
  kHypLowerCaseOrder,
  kHypMidpoint,
  kHolderMobius,
  kHolderRadial1,
  kHolderRadial2,
  kHolderRadial4,
  kHolderDominance,
  kHolderHypVsP,
  kHolderHypVsCollinear,
  kCheckCount
};

using S = SuiteId;

constexpr std::array<CheckSpec, kCheckCount> kChecks{{
    {"chain.quarter_rho_le_jstar", "M1", S::Chain, "j* - th(rho/4)"},
    {"chain.jstar_le_s", "M1", S::Chain, "s - j*"},
    {"chain.s_le_p", "M1", S::Chain, "p - s"},
    {"chain.p_le_half_rho", "M1", S::Chain, "th(rho/2) - p"},
    {"chain.half_rho_le_twice_quarter", "M1", S::Chain, "2 th(rho/4) - th(rho/2)"},
    {"chain.ray_monotone", "M9", S::Chain, "min over t = 1/4, 1/2, 3/4 of s(x, x+(t+1/4)(y-x)) - s(x, x+t(y-x))"},
    {"chain.s_le_max_modulus", "M10", S::Chain, "max(|x|,|y|) - s"},
    {"chain.ball_sup", "M11", S::Chain, "r/(1-|c|) - s(a,b) for a, b uniform in B(x, r)"},
    {"chain.ball_attained", "M11", S::Chain, "-|s(c-ru, c+ru) - r/(1-|c|)| with u = c/|c|, for 1-|c| >= 1e-6"},
    {"barrlund.s_le_b1", "M2", S::Barrlund, "b_1 - s"},
    {"barrlund.b1_le_scaled_s", "M2", S::Barrlund, "s - b_1"},
    {"barrlund.s_le_b2", "M2", S::Barrlund, "b_2 - s"},
    {"barrlund.b2_le_scaled_s", "M2", S::Barrlund, "sqrt2 s - b_2"},
    {"barrlund.s_le_b3", "M2", S::Barrlund, "b_3 - s"},
    {"barrlund.b3_le_scaled_s", "M2", S::Barrlund, "2^(2/3) s - b_3"},
    {"barrlund.s_ge_b_over_sqrt2", "M3", S::Barrlund, "s - b_2/sqrt2 (unit disk)"},
    {"barrlund.jstar_ge_half_b", "M3", S::Barrlund, "j* - b_2/2 (unit disk)"},
    {"barrlund.jstar_le_b", "M3", S::Barrlund, "b_2 - j* (unit disk)"},
    {"barrlund.p_ge_b_over_sqrt2", "M3", S::Barrlund, "p - b_2/sqrt2 (unit disk)"},
    {"barrlund.p_le_const_b", "M3", S::Barrlund, "(sqrt10+sqrt2)/4 b_2 - p (unit disk)"},
    {"low.s_ge_low", "M4", S::Low, "s - low"},
    {"low.low_le_sqrt2_jstar", "M5", S::Low, "sqrt2 j* - low"},
    {"low.low_le_p", "M5", S::Low, "p - low"},
    {"low.low_le_b", "M5", S::Low, "b_2 - low"},
    {"low.quotient_cap", "M6", S::Low, "1 - (s/low) / ((1+r)/(2r)) with r = max(|x|,|y|)"},
    {"low.low_le_half_rho", "M7", S::Low, "th(rho/2) - low"},
    {"low.triangle_failure", "M8", S::Low, "low(0.3,-0.1) - low(0.3,0.1) - low(0.1,-0.1), sample 0 only"},
    {"rotation-euclidean.closed_le_lower", "R1", S::RotationEuclidean,
     "s(x0,y0) - |x-y|/sqrt(|x-y|^2+(2-|x+y|)^2)"},
    {"rotation-euclidean.lower_le_s", "R1", S::RotationEuclidean, "s - s(x0,y0)"},
    {"rotation-euclidean.s_le_upper", "R1", S::RotationEuclidean, "s(x1,y1) - s when |k|+r < 1"},
    {"rotation-euclidean.s_le_collinear", "R1", S::RotationEuclidean, "|x-y|/(2-|x+y|) - s"},
    {"rotation-euclidean.midpoint_kept", "R6", S::RotationEuclidean, "-|(x0+y0)/2 - k|", 1e-12},
    {"rotation-euclidean.quotient_decreasing", "R7", S::RotationEuclidean,
     "min over 50 chord angles of q(mu_i) - q(mu_(i+1)), k = |x|, z = 2-|y|"},
    {"rotation-hyperbolic.lower_le_s", "R2", S::RotationHyperbolic, "s - s(x2,y2)"},
    {"rotation-hyperbolic.s_le_upper", "R2", S::RotationHyperbolic, "(1+|q|)t/(1+|q|t^2) - s"},
    {"rotation-hyperbolic.bounds_match_rotation", "R2", S::RotationHyperbolic,
     "-max(|lower - s(x2,y2)|, |upper - s(x3,y3)|) with s from the solver"},
    {"rotation-hyperbolic.chord_lower", "R3", S::RotationHyperbolic, "|x-y| - |x2-y2|", 1e-12},
    {"rotation-hyperbolic.chord_upper", "R3", S::RotationHyperbolic, "|x3-y3| - |x-y|", 1e-12},
    {"rotation-hyperbolic.chord_bound", "R4", S::RotationHyperbolic, "2(1-|q|^2)t/(1-|q|^2t^2) - |x-y|"},
    {"rotation-hyperbolic.chord_bound_2t", "R4", S::RotationHyperbolic, "2t - 2(1-|q|^2)t/(1-|q|^2t^2)"},
    {"rotation-hyperbolic.lower_case_order", "R5", S::RotationHyperbolic,
     "sqrt((|q|^2+t^2)/(1+|q|^2t^2)) - t(1+|q|)/sqrt((1+t^2)(1+|q|^2t^2))"},
    {"rotation-hyperbolic.midpoint_kept", "R6", S::RotationHyperbolic,
     "-max(|q(x2,y2) - q|, |q(x3,y3) - q|), when all points are >= 1e-6 from the circle", 1e-9},
    {"holder.mobius", "H1", S::Holder, "best(K=1) - |f(x)-f(y)| for a random Mobius automorphism f", 1e-12},
    {"holder.radial_k1", "H2", S::Holder, "best(K=1) - |f(x)-f(y)| for the radial stretch with K = 1", 1e-12},
    {"holder.radial_k2", "H2", S::Holder, "best(K=2) - |f(x)-f(y)| for the radial stretch with K = 2", 1e-12},
    {"holder.radial_k4", "H2", S::Holder, "best(K=4) - |f(x)-f(y)| for the radial stretch with K = 4", 1e-12},
    {"holder.dominance", "H3", S::Holder, "min over K in {1,2,4} of (smallest corollary bound - main bound)"},
    {"holder.hyp_le_p", "H4", S::Holder, "cor_p - cor_hyp (K = 1)", 0.0, true},
    {"holder.hyp_le_collinear", "H4", S::Holder, "cor_collinear - cor_hyp (K = 1)", 0.0, true},
}};

constexpr std::size_t first_check(SuiteId suite) {
  for (std::size_t i = 0; i < kChecks.size(); ++i) {
    if (kChecks[i].suite == suite) return i;
  }
  return kChecks.size();
}

constexpr std::size_t check_count(SuiteId suite) {
  std::size_t n = 0;
  for (const auto& c : kChecks) n += c.suite == suite ? 1 : 0;
  return n;
}

std::string_view ratio_label(SuiteId suite) {
  switch (suite) {
    case S::Chain: return "s/jstar";
    case S::Barrlund: return "p/b2";
    case S::Low: return "s/low";
    case S::RotationEuclidean: return "s/s(x0,y0)";
    case S::RotationHyperbolic: return "upper/lower";
    case S::Holder: return "|f(x)-f(y)|/best";
  }
  return "";
}

// Per-chunk accumulation; merged in chunk order.
struct CheckAcc {
  std::uint64_t evaluated = 0;
  std::uint64_t violations = 0;
  std::uint64_t noise = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::uint64_t min_index = 0;
};

struct ChunkResult {
  std::vector<CheckAcc> checks;
  std::vector<ViolationRecord> records;
  double max_ratio = -std::numeric_limits<double>::infinity();
  std::uint64_t max_ratio_index = 0;
};

class Recorder {
 public:
  Recorder(const SuiteConfig& config, SuiteId suite, const Domain& domain, ChunkResult& out)
      : config_(config), suite_(suite), domain_(domain), first_(first_check(suite)), out_(out) {}

  void begin(std::uint64_t index, Point x, Point y) {
    index_ = index;
    x_ = x;
    y_ = y;
  }

  void check(std::size_t id, double slack) {
    const CheckSpec& spec = kChecks[id];
    CheckAcc& acc = out_.checks[id - first_];
    ++acc.evaluated;
    if (slack < acc.min_slack || std::isnan(slack)) {
      acc.min_slack = std::isnan(slack) ? -std::numeric_limits<double>::infinity() : slack;
      acc.min_index = index_;
    }
    if (spec.monitored || slack >= 0.0) return;
    const double tol = spec.fixed_tolerance > 0.0 ? spec.fixed_tolerance : config_.tolerance;
    if (slack >= -tol) {
      ++acc.noise;
      return;
    }
    ++acc.violations;
    if (out_.records.size() < kMaxViolationRecords) {
      out_.records.push_back({index_, x_, y_, std::string(spec.id), slack, reproduce()});
    }
  }

  void ratio(double value) {
    if (value > out_.max_ratio) {
      out_.max_ratio = value;
      out_.max_ratio_index = index_;
    }
  }

  std::uint64_t index() const noexcept { return index_; }

 private:
  std::string reproduce() const {
    std::string cmd = "trm verify --suite " + std::string(to_string(suite_)) + " --samples " +
                      std::to_string(config_.samples) + " --seed " + std::to_string(config_.seed) + " --tol " +
                      shortest(config_.tolerance) + " --index " + std::to_string(index_);
    if (config_.domain) cmd += " --domain '" + describe(domain_) + "'";
    return cmd + " --format json";
  }

  const SuiteConfig& config_;
  SuiteId suite_;
  const Domain& domain_;
  std::size_t first_;
  ChunkResult& out_;
  std::uint64_t index_ = 0;
  Point x_, y_;
};

double s_disk(Point x, Point y) { return s_metric(UnitDisk{}, x, y).value; }

// Equality checks are skipped closer to the circle than this: rounding a
// point p to doubles already moves the compared quantities by about
// eps / (1 - |p|), which exceeds the 1e-9 budget below ~1e-7.
constexpr double kConditionedGap = 1e-6;

bool well_conditioned(std::initializer_list<Point> points) {
  return std::ranges::all_of(points, [](Point p) { return 1.0 - std::abs(p) >= kConditionedGap; });
}

void chain_sample(const PointPair& pair, SampleStream& stream, Recorder& rec) {
  const auto [x, y] = pair;
  const UnitDisk disk;
  const double s = s_disk(x, y);
  const double j = jstar(disk, x, y).value;
  const double p = point_pair(disk, x, y).value;
  const double half = th_half_rho(x, y);
  const double quarter = quarter_param(x, y);
  rec.check(kChainQuarterLeJstar, j - quarter);
  rec.check(kChainJstarLeS, s - j);
  rec.check(kChainSLeP, p - s);
  rec.check(kChainPLeHalf, half - p);
  rec.check(kChainHalfLeTwiceQuarter, 2.0 * quarter - half);
  rec.ratio(s / j);

  double prev = s_disk(x, x + 0.25 * (y - x));
  double ray = std::numeric_limits<double>::infinity();
  for (int step = 2; step <= 4; ++step) {
    const double cur = step == 4 ? s : s_disk(x, x + 0.25 * step * (y - x));
    ray = std::min(ray, cur - prev);
    prev = cur;
  }
  rec.check(kChainRayMonotone, ray);
  rec.check(kChainSLeMaxModulus, std::max(std::abs(x), std::abs(y)) - s);

  const Point c = x;
  const double r = (1.0 - std::abs(c)) * stream.uniform(0.05, 0.95);
  const double diameter = ball_s_diameter(disk, c, r);
  const Point a = sample_in_disk(c, r, stream);
  const Point b = sample_in_disk(c, r, stream);
  rec.check(kChainBallSup, diameter - s_disk(a, b));
  if (well_conditioned({c})) {
    const Point u = std::abs(c) > 0.0 ? c / std::abs(c) : Point(1.0, 0.0);
    rec.check(kChainBallAttained, -std::abs(s_disk(c - r * u, c + r * u) - diameter));
  }
}

void barrlund_sample(const Domain& domain, const PointPair& pair, Recorder& rec) {
  const auto [x, y] = pair;
  const double s = s_metric(domain, x, y).value;
  const double b1 = barrlund(domain, 1.0, x, y).value;
  const double b2 = barrlund(domain, 2.0, x, y).value;
  const double b3 = barrlund(domain, 3.0, x, y).value;
  rec.check(kBarrlundSLeB1, b1 - s);
  rec.check(kBarrlundB1LeScaled, s - b1);
  rec.check(kBarrlundSLeB2, b2 - s);
  rec.check(kBarrlundB2LeScaled, std::numbers::sqrt2 * s - b2);
  rec.check(kBarrlundSLeB3, b3 - s);
  rec.check(kBarrlundB3LeScaled, std::cbrt(4.0) * s - b3);
  if (!std::holds_alternative<UnitDisk>(domain)) return;

  const double j = jstar(domain, x, y).value;
  const double p = point_pair(domain, x, y).value;
  const double best_p = (std::sqrt(10.0) + std::numbers::sqrt2) / 4.0;
  rec.check(kBarrlundSGeB, s - b2 / std::numbers::sqrt2);
  rec.check(kBarrlundJstarGeB, j - b2 / 2.0);
  rec.check(kBarrlundJstarLeB, b2 - j);
  rec.check(kBarrlundPGeB, p - b2 / std::numbers::sqrt2);
  rec.check(kBarrlundPLeB, best_p * b2 - p);
  rec.ratio(p / b2);
}

void low_sample(const PointPair& pair, Recorder& rec) {
  const auto [x, y] = pair;
  const UnitDisk disk;
  const double lo = low(x, y).value;
  const double s = s_disk(x, y);
  rec.check(kLowSGeLow, s - lo);
  rec.check(kLowLeJstar, std::numbers::sqrt2 * jstar(disk, x, y).value - lo);
  rec.check(kLowLeP, point_pair(disk, x, y).value - lo);
  rec.check(kLowLeB, barrlund(disk, 2.0, x, y).value - lo);
  const double r = std::max(std::abs(x), std::abs(y));
  const double cap = (1.0 + r) / (2.0 * r);
  rec.check(kLowQuotientCap, 1.0 - (s / lo) / cap);
  rec.check(kLowLeHalfRho, th_half_rho(x, y) - lo);
  rec.ratio(s / lo);
  if (rec.index() == 0) {
    rec.check(kLowTriangleFailure, low(0.3, -0.1).value - low(0.3, 0.1).value - low(0.1, -0.1).value);
  }
}

// Chord of the unit circle through k on the real axis, turned by mu from the
// direction of z; returns |x-y| / (|x-z| + |z-y|).
double chord_quotient(double k, double z, double mu) {
  const double c = std::cos(mu);
  const double root = std::sqrt(k * k * c * c + 1.0 - k * k);
  const Point dir = std::polar(1.0, mu);
  const Point ahead = k + (root - k * c) * dir;
  const Point behind = k - (root + k * c) * dir;
  return std::abs(ahead - behind) / (std::abs(ahead - z) + std::abs(z - behind));
}

void euclidean_sample(const PointPair& pair, Recorder& rec) {
  const auto [x, y] = pair;
  const double s = s_disk(x, y);
  const EuclideanRotation rot = euclidean_rotation(x, y);
  const EuclideanBounds b = euclidean_bounds(x, y);
  rec.check(kEucClosedLeLower, b.lower - b.lower_closed);
  rec.check(kEucLowerLeS, s - b.lower);
  if (b.upper) rec.check(kEucSLeUpper, *b.upper - s);
  rec.check(kEucSLeCollinear, b.collinear - s);
  rec.check(kEucMidpoint, -std::abs(0.5 * (rot.x0 + rot.y0) - rot.k));
  if (b.lower > 0.0) rec.ratio(s / b.lower);

  constexpr int kAngles = 50;
  const double k = std::abs(x);
  const double z = 2.0 - std::abs(y);
  double prev = chord_quotient(k, z, 0.0);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kAngles; ++i) {
    const double cur = chord_quotient(k, z, 0.5 * std::numbers::pi * i / (kAngles - 1));
    worst = std::min(worst, prev - cur);
    prev = cur;
  }
  rec.check(kEucQuotientDecreasing, worst);
}

void hyperbolic_sample(const PointPair& pair, Recorder& rec) {
  const auto [x, y] = pair;
  const double s = s_disk(x, y);
  const HyperbolicRotation rot = hyperbolic_rotation(x, y);
  const HyperbolicBounds b = hyperbolic_bounds(x, y);
  rec.check(kHypLowerLeS, s - b.lower);
  rec.check(kHypSLeUpper, b.upper - s);
  rec.check(kHypBoundsMatch,
            -std::max(std::abs(b.lower - s_disk(rot.x2, rot.y2)), std::abs(b.upper - s_disk(rot.x3, rot.y3))));
  const double d = std::abs(x - y);
  rec.check(kHypChordLower, d - std::abs(rot.x2 - rot.y2));
  rec.check(kHypChordUpper, std::abs(rot.x3 - rot.y3) - d);
  const double q2 = std::norm(rot.q);
  const double t = rot.t;
  const double chord = 2.0 * (1.0 - q2) * t / (1.0 - q2 * t * t);
  rec.check(kHypChordBound, chord - d);
  rec.check(kHypChordBoundTwoT, 2.0 * t - chord);
  const double qa = std::abs(rot.q);
  const double first = std::sqrt((q2 + t * t) / (1.0 + q2 * t * t));
  const double second = t * (1.0 + qa) / std::sqrt((1.0 + t * t) * (1.0 + q2 * t * t));
  rec.check(kHypLowerCaseOrder, first - second);
  if (well_conditioned({x, y, rot.x2, rot.y2, rot.x3, rot.y3})) {
    rec.check(kHypMidpoint, -std::max(std::abs(hyperbolic_midpoint(rot.x2, rot.y2) - rot.q),
                                      std::abs(hyperbolic_midpoint(rot.x3, rot.y3) - rot.q)));
  }
  if (b.lower > 0.0) rec.ratio(b.upper / b.lower);
}

void holder_sample(const PointPair& pair, SampleStream& stream, Recorder& rec) {
  const auto [x, y] = pair;
  const double s = s_disk(x, y);
  const double r = std::abs(x + y) / 2.0;

  const MobiusAutomorphism mobius{sample_point(UnitDisk{}, stream), stream.uniform(0.0, 2.0 * std::numbers::pi)};
  const HolderReport unit = holder_variants(x, y, 1.0, r, s);
  const double moved = std::abs(apply_test_map(mobius, x) - apply_test_map(mobius, y));
  rec.check(kHolderMobius, unit.best - moved);
  rec.ratio(moved / unit.best);

  double dominance = std::numeric_limits<double>::infinity();
  constexpr std::array<std::pair<double, Check>, 3> kStretches{
      {{1.0, kHolderRadial1}, {2.0, kHolderRadial2}, {4.0, kHolderRadial4}}};
  for (const auto& [K, id] : kStretches) {
    const HolderReport rep = K == 1.0 ? unit : holder_variants(x, y, K, r, s);
    const RadialStretch stretch{K};
    const double dist = std::abs(apply_test_map(stretch, x) - apply_test_map(stretch, y));
    rec.check(id, rep.best - dist);
    rec.ratio(dist / rep.best);
    double corollary = std::min({rep.cor_p, rep.cor_collinear, rep.cor_hyp});
    if (rep.cor_radial) corollary = std::min(corollary, *rep.cor_radial);
    if (rep.cor_unit) corollary = std::min(corollary, *rep.cor_unit);
    dominance = std::min(dominance, corollary - rep.thm_main);
  }
  rec.check(kHolderDominance, dominance);
  rec.check(kHolderHypVsP, unit.cor_p - unit.cor_hyp);
  rec.check(kHolderHypVsCollinear, unit.cor_collinear - unit.cor_hyp);
}

bool supports(SuiteId suite, const Domain& domain) {
  switch (suite) {
    case S::Low: return std::holds_alternative<PuncturedUnitDisk>(domain);
    case S::Barrlund:
      return std::holds_alternative<UnitDisk>(domain) || std::holds_alternative<UpperHalfPlane>(domain) ||
             std::holds_alternative<ConvexPolygon>(domain);
    default: return std::holds_alternative<UnitDisk>(domain);
  }
}

Domain default_domain(SuiteId suite) {
  if (suite == S::Low) return PuncturedUnitDisk{};
  return UnitDisk{};
}

void validate(const SuiteConfig& config) {
  if (config.samples < 1) throw Error(ErrorCode::InvalidConfig, "samples must be at least 1");
  if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance)) {
    throw Error(ErrorCode::InvalidConfig, "tolerance must be a positive finite number");
  }
  if (config.only_index && *config.only_index >= config.samples) {
    throw Error(ErrorCode::InvalidConfig, "index must be smaller than samples");
  }
}

constexpr std::uint64_t kChunkSize = 512;

}  // namespace

std::string_view to_string(SuiteId suite) noexcept {
  switch (suite) {
    case S::Chain: return "chain";
    case S::Barrlund: return "barrlund";
    case S::Low: return "low";
    case S::RotationEuclidean: return "rotation-euclidean";
    case S::RotationHyperbolic: return "rotation-hyperbolic";
    case S::Holder: return "holder";
  }
  return "unknown";
}

SuiteId parse_suite(std::string_view name) {
  for (const SuiteId s : kAllSuites) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorCode::InvalidConfig,
              "unknown suite '" + std::string(name) +
                  "'; expected chain, barrlund, low, rotation-euclidean, rotation-hyperbolic, holder or all");
}

std::span<const Invariant> invariant_catalog() noexcept { return kInvariants; }

std::span<const CheckSpec> check_registry() noexcept { return kChecks; }

std::string shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : format_real(v);
}

SuiteReport run_suite(const SuiteConfig& config) {
  validate(config);
  if (!config.suite) throw Error(ErrorCode::InvalidConfig, "run_suite needs a single suite");
  const SuiteId suite = *config.suite;
  const Domain domain = config.domain.value_or(default_domain(suite));
  if (!supports(suite, domain)) {
    throw Error(ErrorCode::UnsupportedSuiteForDomain,
                "suite '" + std::string(to_string(suite)) + "' does not run on domain '" + describe(domain) + "'");
  }

  const auto start = std::chrono::steady_clock::now();
  const std::size_t first = first_check(suite);
  const std::size_t count = check_count(suite);
  const std::uint64_t begin_index = config.only_index.value_or(0);
  const std::uint64_t total = config.only_index ? 1 : config.samples;
  std::vector<ChunkResult> chunks((total + kChunkSize - 1) / kChunkSize);

  detail::for_each_chunk(total, kChunkSize, config.threads, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
    ChunkResult& out = chunks[c];
    out.checks.resize(count);
    Recorder rec(config, suite, domain, out);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t index = begin_index + i;
      SampleStream stream(config.seed, index);
      const PointPair pair = sample_pair(domain, stream);
      rec.begin(index, pair.x, pair.y);
      switch (suite) {
        case S::Chain: chain_sample(pair, stream, rec); break;
        case S::Barrlund: barrlund_sample(domain, pair, rec); break;
        case S::Low: low_sample(pair, rec); break;
        case S::RotationEuclidean: euclidean_sample(pair, rec); break;
        case S::RotationHyperbolic: hyperbolic_sample(pair, rec); break;
        case S::Holder: holder_sample(pair, stream, rec); break;
      }
    }
  });

  SuiteReport report;
  report.suite = suite;
  report.domain = domain;
  report.samples = config.samples;
  report.seed = config.seed;
  report.tolerance = config.tolerance;
  report.only_index = config.only_index;
  report.sampling = sampling_description(domain);
  report.ratio_label = std::string(ratio_label(suite));

  std::vector<CheckAcc> merged(count);
  for (const ChunkResult& chunk : chunks) {
    for (std::size_t i = 0; i < count; ++i) {
      const CheckAcc& from = chunk.checks[i];
      CheckAcc& to = merged[i];
      to.evaluated += from.evaluated;
      to.violations += from.violations;
      to.noise += from.noise;
      if (from.min_slack < to.min_slack) {
        to.min_slack = from.min_slack;
        to.min_index = from.min_index;
      }
    }
    for (const ViolationRecord& v : chunk.records) {
      if (report.violations.size() < kMaxViolationRecords) report.violations.push_back(v);
    }
    if (chunk.max_ratio > report.max_ratio.value_or(-std::numeric_limits<double>::infinity())) {
      report.max_ratio = chunk.max_ratio;
      report.max_ratio_index = chunk.max_ratio_index;
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    const CheckSpec& spec = kChecks[first + i];
    CheckSummary summary;
    summary.spec = &spec;
    summary.tolerance = spec.fixed_tolerance > 0.0 ? spec.fixed_tolerance : config.tolerance;
    summary.evaluated = merged[i].evaluated;
    summary.violations = merged[i].violations;
    summary.noise = merged[i].noise;
    if (summary.evaluated > 0) {
      summary.min_slack = merged[i].min_slack;
      summary.min_index = merged[i].min_index;
      if (!spec.monitored) {
        report.min_slack = std::min(report.min_slack.value_or(merged[i].min_slack), merged[i].min_slack);
      }
    }
    report.violation_count += summary.violations;
    report.checks.push_back(summary);
  }
  report.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SuiteReport> run_suites(const SuiteConfig& config) {
  if (config.suite) return {run_suite(config)};
  validate(config);
  if (config.domain) {
    throw Error(ErrorCode::UnsupportedSuiteForDomain, "a domain can only be chosen for a single suite");
  }
  std::vector<SuiteReport> reports;
  for (const SuiteId suite : kAllSuites) {
    SuiteConfig one = config;
    one.suite = suite;
    reports.push_back(run_suite(one));
  }
  return reports;
}

}  // namespace trm
