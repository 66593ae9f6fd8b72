#include "trm/hyperbolic.hpp"

#include <cmath>

#include "trm/error.hpp"

namespace trm {

namespace {

void require_disk(Point p, const char* name) { require_inside(UnitDisk{}, p, name); }

// 1 - |p|^2
double co_norm(Point p) { return (1.0 - std::abs(p)) * (1.0 + std::abs(p)); }

}  // namespace

double ahlfors_bracket(Point x, Point y) {
  require_disk(x, "x");
  require_disk(y, "y");
  return std::sqrt(std::norm(x - y) + co_norm(x) * co_norm(y));
}

double th_half_rho(Point x, Point y) { return std::abs(x - y) / ahlfors_bracket(x, y); }

double rho_disk(Point x, Point y) {
  require_disk(x, "x");
  require_disk(y, "y");
  return 2.0 * std::asinh(std::abs(x - y) / std::sqrt(co_norm(x) * co_norm(y)));
}

double rho_half_plane(Point x, Point y) {
  require_inside(UpperHalfPlane{}, x, "x");
  require_inside(UpperHalfPlane{}, y, "y");
  return 2.0 * std::asinh(std::abs(x - y) / (2.0 * std::sqrt(x.imag() * y.imag())));
}

Point hyperbolic_midpoint(Point x, Point y) {
  const double a = ahlfors_bracket(x, y);
  const double cx = co_norm(x);
  const double cy = co_norm(y);
  const double denom = 1.0 - std::norm(x) * std::norm(y) + a * std::sqrt(cx * cy);
  return (y * cx + x * cy) / denom;
}

HypBallEuclid hyp_ball_from_t(Point q, double t) {
  require_disk(q, "q");
  if (!(t > 0.0)) throw Error(ErrorCode::NonpositiveRadius, "hyperbolic radius must be positive");
  if (!(t < 1.0)) throw Error(ErrorCode::PreconditionFailed, "t = th(R/2) must be below 1");
  const double q2 = std::norm(q);
  const double denom = 1.0 - q2 * t * t;
  return {q * ((1.0 - t * t) / denom), co_norm(q) * t / denom, t};
}

HypBallEuclid hyp_ball_to_euclidean(Point q, double R) {
  if (!(R > 0.0)) throw Error(ErrorCode::NonpositiveRadius, "hyperbolic radius must be positive");
  return hyp_ball_from_t(q, std::tanh(0.5 * R));
}

double quarter_param(Point x, Point y) {
  // With s2 = th(rho/2) = d/A, th(rho/4) = s2 / (1 + sqrt(1 - s2^2)) and
  // sqrt(1 - s2^2) = sqrt((1-|x|^2)(1-|y|^2)) / A, so t = d / (A + that root).
  const double a = ahlfors_bracket(x, y);
  return std::abs(x - y) / (a + std::sqrt(co_norm(x) * co_norm(y)));
}

}  // namespace trm
