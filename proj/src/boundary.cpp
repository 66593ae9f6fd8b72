#include "trm/boundary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "trm/detail/search.hpp"
#include "trm/error.hpp"

namespace trm {

std::string_view to_string(InfimumMethod method) noexcept {
  switch (method) {
    case InfimumMethod::ClosedForm: return "closed-form";
    case InfimumMethod::Reflection: return "reflection";
    case InfimumMethod::Numeric: return "numeric";
  }
  return "unknown";
}

double bisector_residual(Point x, Point y, Point z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-9) {
    throw Error(ErrorCode::PointNotOnCircle, "z = " + format_point(z) + " is not on the unit circle");
  }
  if (z == x || z == y) throw Error(ErrorCode::DegenerateInput, "z coincides with x or y");
  const auto angle = [](Point a, Point b) { return std::atan2(std::abs(cross(a, b)), dot(a, b)); };
  return std::abs(angle(x - z, -z) - angle(-z, y - z));
}

namespace {

constexpr double kCollinearSine = 1e-14;
constexpr double kEqualModulus = 1e-15;

InfimumResult disk_result(Point x, Point y, double value, Point z, InfimumMethod method) {
  return {value, z, method, bisector_residual(x, y, z), false};
}

InfimumResult disk_collinear(Point x, Point y) {
  const Point sum = x + y;
  Point z;
  if (std::abs(sum) > 0.0) {
    z = sum / std::abs(sum);
  } else {
    const Point dir = std::abs(y) > 0.0 ? y : x;
    z = dir / std::abs(dir);
  }
  return disk_result(x, y, 2.0 - std::abs(sum), z, InfimumMethod::ClosedForm);
}

// |x| == |y|, not collinear: rotate to the conjugate position w, conj(w)
// with Re(w) > 0 and apply the two-case formula.
InfimumResult disk_equal_modulus(Point x, Point y) {
  const Point sum = x + y;
  const Point u = sum / std::abs(sum);
  const Point w = x * std::conj(u);
  const double h = w.real();
  const double k = std::abs(w.imag());
  const double mod2 = h * h + k * k;
  if (mod2 > h) {
    // Two symmetric minimizers where the focal ellipse touches the circle;
    // report the one at non-negative angle from u.
    const double re = h / mod2;
    const double im = std::sqrt(std::max(0.0, 1.0 - re * re));
    return disk_result(x, y, std::abs(x - y) / std::sqrt(mod2), u * Point(re, im),
                       InfimumMethod::ClosedForm);
  }
  return disk_result(x, y, 2.0 * std::hypot(1.0 - h, k), u, InfimumMethod::ClosedForm);
}

InfimumResult disk_numeric(Point x, Point y) {
  // sqrt of the squared modulus is much cheaper than hypot here and cannot
  // underflow: interior points stay kBoundaryMargin away from the circle.
  const auto f = [x, y](double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double ux = x.real() - c, vx = x.imag() - s;
    const double uy = y.real() - c, vy = y.imag() - s;
    return std::sqrt(ux * ux + vx * vx) + std::sqrt(uy * uy + vy * vy);
  };
  const auto df = [x, y](double t) {
    const Point z = std::polar(1.0, t);
    const Point tangent(-z.imag(), z.real());
    return dot(z - x, tangent) / std::abs(z - x) + dot(z - y, tangent) / std::abs(z - y);
  };

  const std::array hints{std::arg(x), std::arg(y)};
  const detail::Minimum coarse = detail::minimize_on_circle(f, hints);
  double theta = coarse.arg;
  double value = coarse.value;

  // Polish to the stationary point by bisection on the derivative; the
  // golden-section bracket stalls where f is flat to rounding.
  for (double width : {1e-7, 1e-5, 2.0 * std::numbers::pi / detail::kCircleGrid}) {
    double lo = coarse.arg - width;
    double hi = coarse.arg + width;
    if (!(df(lo) < 0.0 && df(hi) > 0.0)) continue;
    for (int i = 0; i < 80 && hi - lo > 0.0; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (df(mid) < 0.0 ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);
    const double v = f(t);
    // Keep the polished angle unless it is measurably worse.
    if (v <= value * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
      theta = t;
      value = std::min(value, v);
    }
    break;
  }
  return disk_result(x, y, value, std::polar(1.0, theta), InfimumMethod::Numeric);
}

InfimumResult disk_infimum(Point x, Point y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ax == 0.0 || ay == 0.0 || std::abs(cross(x, y)) <= kCollinearSine * ax * ay) {
    return disk_collinear(x, y);
  }
  if (std::abs(ax - ay) <= kEqualModulus) return disk_equal_modulus(x, y);
  return disk_numeric(x, y);
}

Point reflect_across_line(Point p, Point a, Point b) {
  const Point d = b - a;
  return a + d * std::conj((p - a) / d);
}

InfimumResult polygon_infimum(const ConvexPolygon& poly, Point x, Point y) {
  InfimumResult best{std::numeric_limits<double>::infinity(), {}, InfimumMethod::Reflection, 0.0, false};
  const auto offer = [&best](double value, Point z) {
    if (value < best.value) {
      best.value = value;
      best.minimizer = z;
    }
  };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly.vertex(i);
    const Point b = poly.vertex(i + 1);
    const Point yr = reflect_across_line(y, a, b);
    const double dx = poly.edge_offset(i, x);
    const double dy = poly.edge_offset(i, y);
    const Point crossing = x + (dx / (dx + dy)) * (yr - x);
    const double s = dot(crossing - a, b - a) / std::norm(b - a);
    if (s >= 0.0 && s <= 1.0) {
      offer(std::abs(x - yr), crossing);
    } else {
      offer(std::abs(x - a) + std::abs(a - y), a);
      offer(std::abs(x - b) + std::abs(b - y), b);
    }
  }
  return best;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

InfimumResult boundary_infimum(const Domain& domain, Point x, Point y) {
  require_inside(domain, x, "x");
  require_inside(domain, y, "y");
  if (x == y) {
    return {2.0 * dist_to_boundary(domain, x), nearest_boundary_point(domain, x),
            InfimumMethod::ClosedForm, 0.0, true};
  }
  // Canonical argument order makes the result exactly symmetric.
  if (y.real() < x.real() || (y.real() == x.real() && y.imag() < x.imag())) std::swap(x, y);

  return std::visit(
      Overloaded{
          [&](const UnitDisk&) { return disk_infimum(x, y); },
          [&](const UpperHalfPlane&) {
            const Point yr = std::conj(y);
            const double t = x.imag() / (x.imag() + y.imag());
            const Point crossing(x.real() + t * (y.real() - x.real()), 0.0);
            return InfimumResult{std::abs(x - yr), crossing, InfimumMethod::Reflection, 0.0, false};
          },
          [&](const ConvexPolygon& poly) { return polygon_infimum(poly, x, y); },
          [&](const PuncturedUnitDisk&) {
            InfimumResult r = disk_infimum(x, y);
            const double through_origin = std::abs(x) + std::abs(y);
            if (through_origin < r.value) {
              r = {through_origin, Point(0.0, 0.0), InfimumMethod::ClosedForm, 0.0, false};
            }
            return r;
          },
          [&](const PointComplement& c) {
            const Point z = c.excluded;
            return InfimumResult{std::abs(x - z) + std::abs(z - y), z, InfimumMethod::ClosedForm, 0.0, false};
          },
      },
      domain);
}

}  // namespace trm
