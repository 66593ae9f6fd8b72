#include "trm/sampling.hpp"

#include <cmath>
#include <numbers>

namespace trm {

namespace {

// SplitMix64 finalizer; spreads (seed, index) over the engine's seed space.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

Point disk_point(SampleStream& s) {
  const double r = std::sqrt(s.uniform());
  return r * unit(s.uniform(0.0, 2.0 * std::numbers::pi));
}

Point near_circle(SampleStream& s) {
  const double gap = s.log_uniform(kStressNear, kStressFar);
  return (1.0 - gap) * unit(s.uniform(0.0, 2.0 * std::numbers::pi));
}

Point near_point(Point center, SampleStream& s) {
  return center + s.log_uniform(kStressNear, kStressFar) * unit(s.uniform(0.0, 2.0 * std::numbers::pi));
}

Point draw(const ConvexPolygon& poly, SampleStream& s) {
  const auto v = poly.vertices();
  double lo_x = v[0].real(), hi_x = lo_x, lo_y = v[0].imag(), hi_y = lo_y;
  for (const Point p : v) {
    lo_x = std::min(lo_x, p.real());
    hi_x = std::max(hi_x, p.real());
    lo_y = std::min(lo_y, p.imag());
    hi_y = std::max(hi_y, p.imag());
  }
  if (s.chance(kStressRate)) {
    const auto i = static_cast<std::size_t>(s.uniform() * static_cast<double>(poly.size()));
    const Point a = poly.vertex(i);
    const Point b = poly.vertex(i + 1);
    const Point along = a + s.uniform() * (b - a);
    const Point inward = Point(0.0, 1.0) * (b - a) / std::abs(b - a);
    return along + s.log_uniform(kStressNear, kStressFar) * inward;
  }
  return {s.uniform(lo_x, hi_x), s.uniform(lo_y, hi_y)};
}

Point draw(const Domain& domain, SampleStream& s) {
  return std::visit(
      Overloaded{
          [&](const UnitDisk&) { return s.chance(kStressRate) ? near_circle(s) : disk_point(s); },
          [&](const PuncturedUnitDisk&) {
            if (!s.chance(kStressRate)) return disk_point(s);
            return s.chance(0.5) ? near_circle(s) : near_point(Point(0.0, 0.0), s);
          },
          [&](const UpperHalfPlane&) {
            const double re = s.uniform(-2.0, 2.0);
            const double im =
                s.chance(kStressRate) ? s.log_uniform(kStressNear, kStressFar) : 2.0 * (1.0 - s.uniform());
            return Point(re, im);
          },
          [&](const ConvexPolygon& poly) { return draw(poly, s); },
          [&](const PointComplement& c) {
            if (s.chance(kStressRate)) return near_point(c.excluded, s);
            return c.excluded + Point(s.uniform(-2.0, 2.0), s.uniform(-2.0, 2.0));
          },
      },
      domain);
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index)
    : engine_(mix(mix(seed) ^ (index + 0x9E3779B97F4A7C15ULL))) {}

double SampleStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SampleStream::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

Point sample_point(const Domain& domain, SampleStream& stream) {
  while (true) {
    const Point p = draw(domain, stream);
    if (contains(domain, p)) return p;
  }
}

PointPair sample_pair(const Domain& domain, SampleStream& stream) {
  const Point x = sample_point(domain, stream);
  while (true) {
    const Point y = sample_point(domain, stream);
    if (std::abs(x - y) >= kMinPairDistance) return {x, y};
  }
}

Point sample_in_disk(Point center, double radius, SampleStream& stream) {
  return center + radius * disk_point(stream);
}

std::string sampling_description(const Domain& domain) {
  const std::string stress = "; with probability 0.1 a point is replaced by a stress point at log-uniform "
                             "distance in [1e-8, 1e-3) from ";
  const std::string tail = "; pairs closer than 1e-9 are redrawn; stream per sample from (seed, index)";
  return std::visit(
      Overloaded{
          [&](const UnitDisk&) { return "uniform on the disk (sqrt radius)" + stress + "the unit circle" + tail; },
          [&](const PuncturedUnitDisk&) {
            return "uniform on the disk (sqrt radius)" + stress + "the unit circle or the origin (equal odds)" + tail;
          },
          [&](const UpperHalfPlane&) {
            return "uniform on [-2, 2] x (0, 2]" + stress + "the real axis" + tail;
          },
          [&](const ConvexPolygon&) {
            return "uniform on the polygon (bounding-box rejection)" + stress + "a uniformly chosen edge" + tail;
          },
          [&](const PointComplement&) {
            return "uniform on the square of half-width 2 around the excluded point" + stress +
                   "the excluded point" + tail;
          },
      },
      domain);
}

}  // namespace trm
