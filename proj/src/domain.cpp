#include "trm/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "trm/error.hpp"

namespace trm {

namespace {

double segment_distance(Point a, Point b, Point p, Point* foot) {
  const Point d = b - a;
  double t = dot(p - a, d) / std::norm(d);
  t = std::clamp(t, 0.0, 1.0);
  const Point f = a + t * d;
  if (foot) *foot = f;
  return std::abs(p - f);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

bool is_finite(Point p) noexcept { return std::isfinite(p.real()) && std::isfinite(p.imag()); }

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorCode::InvalidDomain, "polygon needs at least 3 vertices");
  for (const Point& v : vertices_) {
    if (!is_finite(v)) throw Error(ErrorCode::InvalidDomain, "polygon vertex is not finite");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices_[i] == vertices_[j]) {
        throw Error(ErrorCode::InvalidDomain, "polygon has repeated vertex " + format_point(vertices_[i]));
      }
    }
  }
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = vertex(i + 1) - vertex(i);
    const Point e1 = vertex(i + 2) - vertex(i + 1);
    if (!(cross(e0, e1) > 0.0)) {
      throw Error(ErrorCode::InvalidDomain,
                  "polygon must be strictly convex and counterclockwise (turn at vertex " +
                      format_point(vertex(i + 1)) + ")");
    }
    turning += std::arg(e1 / e0);
  }
  // A star polygon turns more than once.
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-9) {
    throw Error(ErrorCode::InvalidDomain, "polygon is self-intersecting");
  }
}

double ConvexPolygon::edge_offset(std::size_t i, Point p) const noexcept {
  const Point a = vertex(i);
  const Point d = vertex(i + 1) - a;
  return cross(d, p - a) / std::abs(d);
}

std::string describe(const Domain& domain) {
  return std::visit(
      Overloaded{
          [](const UnitDisk&) { return std::string("disk"); },
          [](const UpperHalfPlane&) { return std::string("halfplane"); },
          [](const PuncturedUnitDisk&) { return std::string("punctured"); },
          [](const PointComplement& c) { return "complement:" + format_point(c.excluded); },
          [](const ConvexPolygon& poly) {
            std::string out = "polygon:";
            for (std::size_t i = 0; i < poly.size(); ++i) {
              if (i) out += ';';
              out += format_point(poly.vertex(i));
            }
            return out;
          },
      },
      domain);
}

namespace {

// Distance to the boundary without the interior check; negative or tiny
// values signal the point is outside or on the boundary.
double raw_boundary_distance(const Domain& domain, Point x) {
  return std::visit(
      Overloaded{
          [&](const UnitDisk&) { return 1.0 - std::abs(x); },
          [&](const UpperHalfPlane&) { return x.imag(); },
          [&](const PuncturedUnitDisk&) { return std::min(1.0 - std::abs(x), std::abs(x)); },
          [&](const PointComplement& c) { return std::abs(x - c.excluded); },
          [&](const ConvexPolygon& poly) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < poly.size(); ++i) {
              if (poly.edge_offset(i, x) <= 0.0) return -1.0;
              best = std::min(best, segment_distance(poly.vertex(i), poly.vertex(i + 1), x, nullptr));
            }
            return best;
          },
      },
      domain);
}

}  // namespace

bool contains(const Domain& domain, Point x) noexcept {
  if (!is_finite(x)) return false;
  return raw_boundary_distance(domain, x) > kBoundaryMargin;
}

void require_inside(const Domain& domain, Point x, std::string_view name) {
  if (!contains(domain, x)) {
    throw Error(ErrorCode::PointNotInDomain, std::string(name) + " = " + format_point(x) +
                                                 " is not strictly inside " + describe(domain));
  }
}

double dist_to_boundary(const Domain& domain, Point x) {
  require_inside(domain, x, "x");
  return raw_boundary_distance(domain, x);
}

Point nearest_boundary_point(const Domain& domain, Point x) {
  require_inside(domain, x, "x");
  const auto on_circle = [](Point p) { return std::abs(p) > 0.0 ? p / std::abs(p) : Point(1.0, 0.0); };
  return std::visit(
      Overloaded{
          [&](const UnitDisk&) { return on_circle(x); },
          [&](const UpperHalfPlane&) { return Point(x.real(), 0.0); },
          [&](const PuncturedUnitDisk&) {
            return std::abs(x) <= 1.0 - std::abs(x) ? Point(0.0, 0.0) : on_circle(x);
          },
          [&](const PointComplement& c) { return c.excluded; },
          [&](const ConvexPolygon& poly) {
            double best = std::numeric_limits<double>::infinity();
            Point best_foot;
            for (std::size_t i = 0; i < poly.size(); ++i) {
              Point foot;
              const double d = segment_distance(poly.vertex(i), poly.vertex(i + 1), x, &foot);
              if (d < best) {
                best = d;
                best_foot = foot;
              }
            }
            return best_foot;
          },
      },
      domain);
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_point(Point p) {
  char buf[80];
  const double im = p.imag();
  std::snprintf(buf, sizeof buf, "%.17g%c%.17gi", p.real(), std::signbit(im) ? '-' : '+', std::abs(im));
  return buf;
}

}  // namespace trm
