#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace trm {

/// A planar point, treated as a complex number.
using Point = std::complex<double>;

/// Points closer than this to the boundary are rejected as not interior.
inline constexpr double kBoundaryMargin = 1e-12;

struct UnitDisk {};
struct UpperHalfPlane {};
/// The unit disk minus the origin; {0} is a boundary component.
struct PuncturedUnitDisk {};
/// The plane minus a single point.
struct PointComplement {
  Point excluded;
};

/// Strictly convex polygon with counterclockwise vertices. Validated on
/// construction; throws Error(InvalidDomain) otherwise.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices);

  std::span<const Point> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  Point vertex(std::size_t i) const noexcept { return vertices_[i % vertices_.size()]; }

  /// Signed distance of p from the line through edge i (positive inside).
  double edge_offset(std::size_t i, Point p) const noexcept;

 private:
  std::vector<Point> vertices_;
};

using Domain =
    std::variant<UnitDisk, UpperHalfPlane, ConvexPolygon, PuncturedUnitDisk, PointComplement>;

/// Canonical literal for a domain, e.g. "disk" or "polygon:-1-1i;1-1i;1+1i".
std::string describe(const Domain& domain);

/// Euclidean distance from an interior point to the boundary.
/// Throws Error(PointNotInDomain) when x is not strictly inside.
double dist_to_boundary(const Domain& domain, Point x);

/// True when x lies inside the domain at least kBoundaryMargin away from the boundary.
bool contains(const Domain& domain, Point x) noexcept;

void require_inside(const Domain& domain, Point x, std::string_view name);

/// A boundary point realizing dist_to_boundary(domain, x).
Point nearest_boundary_point(const Domain& domain, Point x);

bool is_finite(Point p) noexcept;

/// z-component of the planar cross product a × b.
inline double cross(Point a, Point b) noexcept { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Point a, Point b) noexcept { return a.real() * b.real() + a.imag() * b.imag(); }

/// "a+bi" with 17 significant digits; parses back to the identical value.
std::string format_point(Point p);
std::string format_real(double v);

}  // namespace trm
