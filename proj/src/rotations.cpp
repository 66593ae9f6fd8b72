#include "trm/rotations.hpp"

#include <cmath>

#include "trm/error.hpp"
#include "trm/hyperbolic.hpp"
#include "trm/metrics.hpp"

namespace trm {

namespace {

void require_distinct_pair(Point x, Point y) {
  require_inside(UnitDisk{}, x, "x");
  require_inside(UnitDisk{}, y, "y");
  if (x == y) throw Error(ErrorCode::DegenerateInput, "rotation needs distinct points");
}

bool collinear_with_origin(Point x, Point y) {
  return std::abs(cross(x, y)) <= 1e-14 * std::abs(x) * std::abs(y);
}

}  // namespace

EuclideanRotation euclidean_rotation(Point x, Point y) {
  require_distinct_pair(x, y);
  EuclideanRotation rot;
  rot.k = 0.5 * (x + y);
  rot.r = std::abs(x - rot.k);
  const double k_abs = std::abs(rot.k);
  if (k_abs == 0.0) {
    rot.x0 = x;
    rot.y0 = y;
    rot.x1 = x;
    rot.y1 = y;
    return rot;
  }
  const Point u = rot.k / k_abs;
  const Point normal(-u.imag(), u.real());
  rot.x0 = rot.k + rot.r * normal;
  rot.y0 = rot.k - rot.r * normal;
  if (k_abs + rot.r < 1.0) rot.x1 = u * (k_abs + rot.r);
  rot.y1 = u * (k_abs - rot.r);
  return rot;
}

EuclideanBounds euclidean_bounds(Point x, Point y) {
  const EuclideanRotation rot = euclidean_rotation(x, y);
  const double d = std::abs(x - y);
  const double gap = 2.0 - std::abs(x + y);
  EuclideanBounds b{};
  b.lower = s_metric(UnitDisk{}, rot.x0, rot.y0).value;
  b.lower_closed = d / std::hypot(d, gap);
  b.collinear = d / gap;
  if (rot.x1) b.upper = b.collinear;
  return b;
}

HyperbolicRotation hyperbolic_rotation(Point x, Point y) {
  require_distinct_pair(x, y);
  HyperbolicRotation rot;
  rot.q = hyperbolic_midpoint(x, y);
  rot.t = quarter_param(x, y);
  const HypBallEuclid ball = hyp_ball_from_t(rot.q, rot.t);
  rot.j = ball.center;
  rot.h = ball.radius;

  const double qa = std::abs(rot.q);
  if (qa == 0.0) {
    const Point u = (x - y) / std::abs(x - y);
    rot.x2 = x;
    rot.y2 = y;
    rot.x3 = rot.t * u;
    rot.y3 = -rot.t * u;
    return rot;
  }
  // Frame with q on the positive real axis; rotate back by the unit phase.
  const Point phase = rot.q / qa;
  const double t2 = rot.t * rot.t;
  const double denom = 1.0 + qa * qa * t2;
  const Point w(qa * (1.0 + t2) / denom, rot.t * (1.0 - qa * qa) / denom);
  rot.x2 = phase * w;
  rot.y2 = phase * std::conj(w);
  const double j_abs = std::abs(rot.j);
  rot.x3 = phase * (j_abs + rot.h);
  rot.y3 = phase * (j_abs - rot.h);
  return rot;
}

HyperbolicBounds hyperbolic_bounds_from(double q_abs, double t) {
  const double q2t2 = q_abs * q_abs * t * t;
  HyperbolicBounds b{};
  if (q_abs < t * t) {
    b.lower = std::sqrt((q_abs * q_abs + t * t) / (1.0 + q2t2));
  } else {
    b.lower = t * (1.0 + q_abs) / std::sqrt((1.0 + t * t) * (1.0 + q2t2));
  }
  b.upper = (1.0 + q_abs) * t / (1.0 + q_abs * t * t);
  return b;
}

HyperbolicBounds hyperbolic_bounds(Point x, Point y) {
  require_distinct_pair(x, y);
  return hyperbolic_bounds_from(std::abs(hyperbolic_midpoint(x, y)), quarter_param(x, y));
}

Point common_pencil_point(Point x, Point y) {
  require_distinct_pair(x, y);
  if (std::abs(x) == 0.0 || std::abs(y) == 0.0 || collinear_with_origin(x, y)) {
    throw Error(ErrorCode::CollinearWithOrigin, "L(x, y) passes through the origin");
  }
  const Point q = hyperbolic_midpoint(x, y);
  const Point d = y - x;
  const double denom = cross(d, q);
  if (std::abs(denom) <= 1e-300) {
    throw Error(ErrorCode::CollinearWithOrigin, "L(x, y) is parallel to L(0, q)");
  }
  return x - (cross(x, q) / denom) * d;
}

Point same_radius_pullup(Point x, Point y) {
  require_inside(UnitDisk{}, x, "x");
  require_inside(UnitDisk{}, y, "y");
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ax == 0.0 || ay == 0.0 || collinear_with_origin(x, y)) {
    throw Error(ErrorCode::PreconditionFailed, "x, y and 0 must not be collinear");
  }
  if (ay > ax) throw Error(ErrorCode::PreconditionFailed, "needs |y| <= |x|");
  const double d = std::abs(x - y);
  if (d > 2.0 * ax) throw Error(ErrorCode::PreconditionFailed, "needs |x - y| <= 2|x|");
  const double psi = std::asin(d / (2.0 * ax));
  const double side = cross(x, y) > 0.0 ? 1.0 : -1.0;
  return x * std::polar(1.0, 2.0 * side * psi);
}

}  // namespace trm
