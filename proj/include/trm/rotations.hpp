#pragma once

#include <optional>

#include "trm/domain.hpp"

namespace trm {

/// Rotation of a pair about its Euclidean midpoint k into the equal-modulus
/// position (x0, y0) and the radial position (x1, y1).
struct EuclideanRotation {
  Point x0, y0;
  std::optional<Point> x1;  // absent when |k| + r >= 1
  Point y1;
  Point k;
  double r = 0.0;
};

/// Rotation of a pair along the hyperbolic circle about its hyperbolic
/// midpoint q into the equal-modulus position (x2, y2) and the radial
/// position (x3, y3), |y3| < |q| < |x3|.
struct HyperbolicRotation {
  Point x2, y2;
  Point x3, y3;
  Point q;
  double t = 0.0;  // th(rho(x,y)/4)
  Point j;         // Euclidean center of the hyperbolic circle
  double h = 0.0;  // Euclidean radius of the hyperbolic circle
};

struct EuclideanBounds {
  double lower;                 // s(x0, y0)
  double lower_closed;          // |x-y| / sqrt(|x-y|^2 + (2-|x+y|)^2)
  std::optional<double> upper;  // s(x1, y1), present iff r + |k| < 1
  double collinear;             // |x-y| / (2-|x+y|), an upper bound in every case
};

struct HyperbolicBounds {
  double lower;  // s(x2, y2)
  double upper;  // s(x3, y3) = (1+|q|) t / (1 + |q| t^2)
};

EuclideanRotation euclidean_rotation(Point x, Point y);
EuclideanBounds euclidean_bounds(Point x, Point y);

HyperbolicRotation hyperbolic_rotation(Point x, Point y);
HyperbolicBounds hyperbolic_bounds(Point x, Point y);

/// Closed forms for s(x2, y2) and s(x3, y3) from |q| and t.
HyperbolicBounds hyperbolic_bounds_from(double q_abs, double t);

/// L(0, q) ∩ L(x, y); the chords of every rotated pair pass through it.
/// Throws CollinearWithOrigin when x, y, 0 are collinear.
Point common_pencil_point(Point x, Point y);

/// y' = x e^{2 psi i}, psi = arcsin(|x-y| / (2|x|)), on the same side of
/// L(0, x) as y. Needs 0 < |y| <= |x| and x, y, 0 non-collinear.
Point same_radius_pullup(Point x, Point y);

}  // namespace trm
