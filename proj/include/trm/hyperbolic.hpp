#pragma once

#include "trm/domain.hpp"

namespace trm {

/// Euclidean description of a hyperbolic disk in the unit disk.
struct HypBallEuclid {
  Point center;   // j
  double radius;  // h
  double t;       // th(R/2)
};

/// sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2)); equals |x| |y - x/|x|^2| for x != 0.
double ahlfors_bracket(Point x, Point y);

/// th(rho(x,y)/2) = |x-y| / A[x,y].
double th_half_rho(Point x, Point y);

/// Hyperbolic distance in the unit disk, computed as
/// 2 asinh(|x-y| / sqrt((1-|x|^2)(1-|y|^2))), which stays accurate near the circle.
double rho_disk(Point x, Point y);

/// Hyperbolic distance in the upper half-plane.
double rho_half_plane(Point x, Point y);

/// Point q on the geodesic with rho(x,q) = rho(q,y) = rho(x,y)/2.
Point hyperbolic_midpoint(Point x, Point y);

/// B_rho(q, R) as a Euclidean disk. Throws NonpositiveRadius for R <= 0.
HypBallEuclid hyp_ball_to_euclidean(Point q, double R);

/// Same conversion parameterized directly by t = th(R/2) in (0, 1).
HypBallEuclid hyp_ball_from_t(Point q, double t);

/// th(rho(x,y)/4), evaluated without forming rho.
double quarter_param(Point x, Point y);

}  // namespace trm
