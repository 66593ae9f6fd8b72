#pragma once

#include <cstddef>
#include <string_view>

#include "trm/domain.hpp"

namespace trm {

enum class InfimumMethod { ClosedForm, Reflection, Numeric };

std::string_view to_string(InfimumMethod method) noexcept;

/// inf over the boundary of |x - z| + |z - y| together with a minimizing z.
struct InfimumResult {
  double value = 0.0;
  Point minimizer;
  InfimumMethod method = InfimumMethod::ClosedForm;
  /// Bisector residual at the minimizer for unit-circle minimizers, else 0.
  double residual = 0.0;
  /// Set when x == y; value is then 2 * dist_to_boundary(x).
  bool degenerate = false;
};

/// Global boundary infimum for x, y strictly inside the domain.
///
/// Half-plane and polygons use the reflection principle. The unit disk uses
/// closed forms when x, y are collinear with the origin or have equal
/// moduli, and a 720-angle grid search with golden-section refinement
/// otherwise. The punctured disk also considers the path through 0.
/// The result does not depend on the order of x and y.
InfimumResult boundary_infimum(const Domain& domain, Point x, Point y);

/// Independent brute-force reference: dense boundary sampling with
/// `resolution` points followed by Brent refinement. resolution >= 1024.
double oracle_boundary_infimum(const Domain& domain, Point x, Point y, std::size_t resolution);

/// |angle(x - z, -z) - angle(-z, y - z)| for z on the unit circle; zero iff
/// the radius to z bisects the angle XZY.
double bisector_residual(Point x, Point y, Point z);

}  // namespace trm
