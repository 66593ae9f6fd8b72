#pragma once

#include <optional>
#include <string_view>

#include "trm/boundary.hpp"
#include "trm/domain.hpp"

namespace trm {

enum class Metric { S, JStar, PointPair, Barrlund, Low, Rho };

std::string_view to_string(Metric metric) noexcept;

struct MetricValue {
  double value = 0.0;
  Metric metric = Metric::S;
  Domain domain;
  /// Boundary infimum behind s_G.
  std::optional<InfimumResult> detail;
  /// Boundary point attaining the Barrlund supremum.
  std::optional<Point> extremal;
};

/// Triangular ratio metric |x-y| / inf_z (|x-z| + |z-y|).
MetricValue s_metric(const Domain& domain, Point x, Point y);

/// Closed-form s in the unit disk when x, y, 0 are collinear or |x| = |y|;
/// empty when neither applies.
std::optional<MetricValue> s_disk_special(Point x, Point y);

MetricValue jstar(const Domain& domain, Point x, Point y);

/// Point pair function |x-y| / sqrt(|x-y|^2 + 4 d(x) d(y)).
MetricValue point_pair(const Domain& domain, Point x, Point y);

/// Barrlund metric b_{G,p}; closed form for the unit disk with p = 2,
/// boundary search otherwise. Throws InvalidExponent for p < 1.
MetricValue barrlund(const Domain& domain, double p, Point x, Point y);

/// |x-y| / min(|x-y*|, |x*-y|) with p* = p/|p|^2, on the punctured disk.
MetricValue low(Point x, Point y);

/// Hyperbolic distance; unit disk and upper half-plane only.
MetricValue rho(const Domain& domain, Point x, Point y);

/// |x-y| / (2 - |x+y|): equals s for pairs collinear with the origin and
/// bounds s from above for every pair in the unit disk.
double collinear_bound(Point x, Point y);

/// Upper bound for s_G when G is starlike w.r.t. x and d(x) + d(y) <= |x-y|.
/// Only the unit disk, half-plane and convex polygons are accepted.
double starlike_upper_bound(const Domain& domain, Point x, Point y);

/// s_G-diameter r / (r + d) of the closed ball B(center, radius), d = d(ball, boundary).
double ball_s_diameter(const Domain& domain, Point center, double radius);

}  // namespace trm
