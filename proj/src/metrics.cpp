#include "trm/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "trm/detail/search.hpp"
#include "trm/error.hpp"
#include "trm/hyperbolic.hpp"

namespace trm {

std::string_view to_string(Metric metric) noexcept {
  switch (metric) {
    case Metric::S: return "s";
    case Metric::JStar: return "jstar";
    case Metric::PointPair: return "p";
    case Metric::Barrlund: return "barrlund";
    case Metric::Low: return "low";
    case Metric::Rho: return "rho";
  }
  return "unknown";
}

namespace {

double clamp_unit(double v) {
  assert(v <= 1.0 + 1e-12 && "metric value exceeds 1 beyond rounding");
  return std::clamp(v, 0.0, 1.0);
}

void require_pair(const Domain& domain, Point x, Point y) {
  require_inside(domain, x, "x");
  require_inside(domain, y, "y");
}

}  // namespace

double collinear_bound(Point x, Point y) {
  require_pair(UnitDisk{}, x, y);
  return std::abs(x - y) / (2.0 - std::abs(x + y));
}

std::optional<MetricValue> s_disk_special(Point x, Point y) {
  require_pair(UnitDisk{}, x, y);
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  const double d = std::abs(x - y);
  MetricValue out{0.0, Metric::S, UnitDisk{}, std::nullopt, std::nullopt};
  if (ax == 0.0 || ay == 0.0 || std::abs(cross(x, y)) <= 1e-14 * ax * ay) {
    out.value = clamp_unit(d / (2.0 - std::abs(x + y)));
    return out;
  }
  if (std::abs(ax - ay) > 1e-15) return std::nullopt;
  const Point sum = x + y;
  const Point w = x * std::conj(sum / std::abs(sum));
  const double h = w.real();
  const double k = std::abs(w.imag());
  if (!(h > 0.0) || k == 0.0) return std::nullopt;
  out.value = clamp_unit(std::norm(w - 0.5) > 0.25 ? std::abs(w) : k / std::hypot(1.0 - h, k));
  return out;
}

MetricValue s_metric(const Domain& domain, Point x, Point y) {
  InfimumResult inf = boundary_infimum(domain, x, y);
  MetricValue out{0.0, Metric::S, domain, inf, std::nullopt};
  if (inf.degenerate) return out;
  if (std::holds_alternative<UnitDisk>(domain)) {
    if (auto special = s_disk_special(x, y)) {
      out.value = special->value;
      return out;
    }
  }
  out.value = clamp_unit(std::abs(x - y) / inf.value);
  return out;
}

MetricValue jstar(const Domain& domain, Point x, Point y) {
  require_pair(domain, x, y);
  const double d = std::abs(x - y);
  const double m = std::min(dist_to_boundary(domain, x), dist_to_boundary(domain, y));
  return {clamp_unit(d / (d + 2.0 * m)), Metric::JStar, domain, std::nullopt, std::nullopt};
}

MetricValue point_pair(const Domain& domain, Point x, Point y) {
  require_pair(domain, x, y);
  const double d = std::abs(x - y);
  const double prod = dist_to_boundary(domain, x) * dist_to_boundary(domain, y);
  return {clamp_unit(d / std::sqrt(d * d + 4.0 * prod)), Metric::PointPair, domain, std::nullopt,
          std::nullopt};
}

namespace {

struct BoundaryMin {
  double value;
  Point where;
};

// min over the boundary of (|x-z|^p + |z-y|^p)^(1/p). The search runs on
// the p-th power, which has the same minimizer and skips one pow per step.
BoundaryMin barrlund_denominator(const Domain& domain, double p, Point x, Point y) {
  const auto power_sum = [p, x, y](Point z) {
    const double a2 = std::norm(x - z);
    const double b2 = std::norm(z - y);
    if (p == 1.0) return std::sqrt(a2) + std::sqrt(b2);
    if (p == 2.0) return a2 + b2;
    return std::pow(a2, 0.5 * p) + std::pow(b2, 0.5 * p);
  };
  const auto root = [p](BoundaryMin m) {
    if (p != 1.0) m.value = p == 2.0 ? std::sqrt(m.value) : std::pow(m.value, 1.0 / p);
    return m;
  };
  const auto norm_p = [&](Point z) { return root({power_sum(z), z}).value; };
  const auto on_circle = [&]() {
    std::vector<double> hints;
    for (const Point p : {x, y}) {
      if (p != Point(0.0, 0.0)) hints.push_back(std::arg(p));
    }
    const detail::Minimum m = detail::minimize_on_circle(
        [&](double t) { return power_sum(Point(std::cos(t), std::sin(t))); }, hints);
    return root({m.value, std::polar(1.0, m.arg)});
  };

  if (std::holds_alternative<UnitDisk>(domain)) return on_circle();
  if (std::holds_alternative<PuncturedUnitDisk>(domain)) {
    BoundaryMin best = on_circle();
    const double origin = norm_p(Point(0.0, 0.0));
    if (origin < best.value) best = {origin, Point(0.0, 0.0)};
    return best;
  }
  if (const auto* c = std::get_if<PointComplement>(&domain)) return {norm_p(c->excluded), c->excluded};
  if (std::holds_alternative<UpperHalfPlane>(domain)) {
    // Convex along the real axis with the minimum between the projections.
    const double lo = std::min(x.real(), y.real());
    const double hi = std::max(x.real(), y.real());
    if (lo == hi) return {norm_p(Point(lo, 0.0)), Point(lo, 0.0)};
    const auto f = [&](double t) { return norm_p(Point(t, 0.0)); };
    const detail::Minimum m = detail::golden_section(f, lo, hi, 1e-15 * std::max(1.0, hi - lo));
    return {m.value, Point(m.arg, 0.0)};
  }
  const auto& poly = std::get<ConvexPolygon>(domain);
  BoundaryMin best{std::numeric_limits<double>::infinity(), {}};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly.vertex(i);
    const Point b = poly.vertex(i + 1);
    const auto f = [&](double s) { return norm_p(a + s * (b - a)); };
    detail::Minimum m = detail::golden_section(f, 0.0, 1.0, 1e-15);
    if (f(0.0) <= m.value) m = {0.0, f(0.0)};
    if (m.value < best.value) best = {m.value, a + m.arg * (b - a)};
  }
  return best;
}

}  // namespace

MetricValue barrlund(const Domain& domain, double p, Point x, Point y) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::InvalidExponent, "Barrlund exponent must be a finite p >= 1, got " + format_real(p));
  }
  require_pair(domain, x, y);
  MetricValue out{0.0, Metric::Barrlund, domain, std::nullopt, std::nullopt};
  if (x == y) return out;
  const double d = std::abs(x - y);
  if (std::holds_alternative<UnitDisk>(domain) && p == 2.0) {
    // 2 + |x|^2 + |y|^2 - 2|x+y| rewritten without cancellation near the circle:
    // (1-|x|)^2 + (1-|y|)^2 + 2(|x| + |y| - |x+y|).
    const Point sum = x + y;
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    const Point c = x * std::conj(y);
    const double prod = ax * ay;
    const double slack = c.real() > 0.0 ? c.imag() * c.imag() / (prod + c.real()) : prod - c.real();
    const double triangle = 2.0 * slack / (ax + ay + std::abs(sum));
    const double denom = (1.0 - ax) * (1.0 - ax) + (1.0 - ay) * (1.0 - ay) + 2.0 * triangle;
    out.value = d / std::sqrt(denom);
    out.extremal = std::abs(sum) > 0.0 ? sum / std::abs(sum) : Point(1.0, 0.0);
    return out;
  }
  const BoundaryMin m = barrlund_denominator(domain, p, x, y);
  out.value = d / m.value;
  out.extremal = m.where;
  return out;
}

MetricValue low(Point x, Point y) {
  if (x == Point(0.0, 0.0) || y == Point(0.0, 0.0)) {
    throw Error(ErrorCode::OriginNotAllowed, "low() is defined on the punctured disk only");
  }
  require_pair(UnitDisk{}, x, y);
  MetricValue out{0.0, Metric::Low, PuncturedUnitDisk{}, std::nullopt, std::nullopt};
  if (x == y) return out;
  const Point x_star = x / std::norm(x);
  const Point y_star = y / std::norm(y);
  out.value = clamp_unit(std::abs(x - y) / std::min(std::abs(x - y_star), std::abs(x_star - y)));
  return out;
}

MetricValue rho(const Domain& domain, Point x, Point y) {
  MetricValue out{0.0, Metric::Rho, domain, std::nullopt, std::nullopt};
  if (std::holds_alternative<UnitDisk>(domain)) {
    out.value = rho_disk(x, y);
  } else if (std::holds_alternative<UpperHalfPlane>(domain)) {
    out.value = rho_half_plane(x, y);
  } else {
    throw Error(ErrorCode::UnsupportedDomain, "rho is available for the unit disk and the upper half-plane only");
  }
  return out;
}

double starlike_upper_bound(const Domain& domain, Point x, Point y) {
  if (!std::holds_alternative<UnitDisk>(domain) && !std::holds_alternative<UpperHalfPlane>(domain) &&
      !std::holds_alternative<ConvexPolygon>(domain)) {
    throw Error(ErrorCode::UnsupportedDomain, "starlike bound needs a convex domain, got " + describe(domain));
  }
  require_pair(domain, x, y);
  const double d = std::abs(x - y);
  const double dx = dist_to_boundary(domain, x);
  const double dy = dist_to_boundary(domain, y);
  if (dx + dy > d) {
    throw Error(ErrorCode::PreconditionFailed, "starlike bound needs d(x) + d(y) <= |x - y|");
  }
  return d / (dx + std::sqrt(d * d + dx * dx - 2.0 * dx * std::sqrt(d * d - dy * dy)));
}

double ball_s_diameter(const Domain& domain, Point center, double radius) {
  if (!(radius >= 0.0) || !std::isfinite(radius) || !contains(domain, center)) {
    throw Error(ErrorCode::BallNotContained, "ball B(" + format_point(center) + ", " + format_real(radius) +
                                                 ") is not inside " + describe(domain));
  }
  const double gap = dist_to_boundary(domain, center) - radius;
  if (!(gap > 0.0)) {
    throw Error(ErrorCode::BallNotContained, "closed ball B(" + format_point(center) + ", " + format_real(radius) +
                                                 ") meets the boundary of " + describe(domain));
  }
  return radius / (radius + gap);
}

}  // namespace trm
