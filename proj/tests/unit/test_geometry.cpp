#include <cmath>
#include <numbers>

#include "doctest.h"
#include "trm/boundary.hpp"
#include "trm/error.hpp"
#include "trm/parse.hpp"

using namespace trm;
using doctest::Approx;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidConfig;
}

const ConvexPolygon kSquare({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
const ConvexPolygon kTriangle({{0, 0}, {2, 0}, {1, 1.5}});

}  // namespace

TEST_SUITE("geom_domains") {
  TEST_CASE("dist_to_boundary per domain") {
    CHECK(dist_to_boundary(UnitDisk{}, 0.0) == 1.0);
    CHECK(dist_to_boundary(UnitDisk{}, Point(0.3, 0.4)) == Approx(0.5).epsilon(1e-15));
    CHECK(dist_to_boundary(UpperHalfPlane{}, Point(2, 0.7)) == 0.7);
    CHECK(dist_to_boundary(PuncturedUnitDisk{}, Point(0.2, 0)) == Approx(0.2));
    CHECK(dist_to_boundary(PuncturedUnitDisk{}, Point(0.9, 0)) == Approx(0.1));
    CHECK(dist_to_boundary(PointComplement{Point(1, 1)}, Point(4, 5)) == 5.0);
    CHECK(dist_to_boundary(kSquare, Point(0.5, -0.2)) == Approx(0.5));
  }

  TEST_CASE("points on or outside the boundary are rejected") {
    CHECK(code_of([] { dist_to_boundary(UnitDisk{}, Point(1, 0)); }) == ErrorCode::PointNotInDomain);
    CHECK(code_of([] { dist_to_boundary(UnitDisk{}, Point(0.8, 0.8)); }) == ErrorCode::PointNotInDomain);
    CHECK(code_of([] { dist_to_boundary(UpperHalfPlane{}, Point(3, 0)); }) == ErrorCode::PointNotInDomain);
    CHECK(code_of([] { dist_to_boundary(PuncturedUnitDisk{}, Point(0, 0)); }) == ErrorCode::PointNotInDomain);
    CHECK(code_of([] { dist_to_boundary(kSquare, Point(1, 0.5)); }) == ErrorCode::PointNotInDomain);
    CHECK(code_of([] { dist_to_boundary(UnitDisk{}, Point(1 - 1e-13, 0)); }) == ErrorCode::PointNotInDomain);
    CHECK(code_of([] { dist_to_boundary(UnitDisk{}, Point(NAN, 0)); }) == ErrorCode::PointNotInDomain);
  }

  TEST_CASE("polygon validation") {
    CHECK(code_of([] { ConvexPolygon({{0, 0}, {1, 0}}); }) == ErrorCode::InvalidDomain);
    CHECK(code_of([] { ConvexPolygon({{0, 0}, {0, 1}, {1, 0}}); }) == ErrorCode::InvalidDomain);  // clockwise
    CHECK(code_of([] { ConvexPolygon({{0, 0}, {2, 0}, {1, 0.1}, {2, 2}, {0, 2}}); }) == ErrorCode::InvalidDomain);
    CHECK(code_of([] { ConvexPolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}); }) == ErrorCode::InvalidDomain);
    CHECK(code_of([] { ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}); }) == ErrorCode::InvalidDomain);
  }

  TEST_CASE("boundary_infimum closed forms") {
    const InfimumResult radial = boundary_infimum(UnitDisk{}, 0.0, 0.5);
    CHECK(radial.value == Approx(1.5).epsilon(1e-15));
    CHECK(std::abs(radial.minimizer - Point(1, 0)) < 1e-15);
    CHECK(radial.method == InfimumMethod::ClosedForm);

    const InfimumResult conj = boundary_infimum(UnitDisk{}, Point(0.2, 0.6), Point(0.2, -0.6));
    CHECK(conj.value == Approx(1.2 / std::sqrt(0.4)).epsilon(1e-14));
    CHECK(conj.value == Approx(1.8973665961010276).epsilon(1e-14));

    const InfimumResult half = boundary_infimum(UpperHalfPlane{}, Point(0, 1), Point(1, 1));
    CHECK(half.value == Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(std::abs(half.minimizer - Point(0.5, 0)) < 1e-15);
    CHECK(half.method == InfimumMethod::Reflection);
  }

  TEST_CASE("boundary_infimum frozen values from the mpmath oracle") {
    CHECK(boundary_infimum(UnitDisk{}, Point(0.3, 0.1), Point(-0.2, 0.4)).value ==
          Approx(std::abs(Point(0.5, -0.3)) / 0.3687817782917155).epsilon(1e-13));
    CHECK(boundary_infimum(UnitDisk{}, Point(0.6, 0.2), Point(0.6, -0.2)).value ==
          Approx(0.89442719099991593).epsilon(1e-14));
    CHECK(boundary_infimum(kSquare, Point(0.2, 0.3), Point(-0.5, -0.1)).value ==
          Approx(1.7464249196572981).epsilon(1e-14));
    CHECK(boundary_infimum(kTriangle, Point(0.9, 0.5), Point(1.2, 0.3)).value ==
          Approx(0.85440037453175308).epsilon(1e-14));
    // One point 2e-4 from the circle: the minimum is far narrower than a grid cell.
    const Point x(0.21527757262375607, 0.9765523897700461);
    const Point y(0.19116965970067065, 0.98155694858818276);
    CHECK(boundary_infimum(UnitDisk{}, x, y).value == Approx(0.024621883478789436).epsilon(1e-13));
    CHECK(oracle_boundary_infimum(UnitDisk{}, x, y, 8192) == Approx(0.024621883478789436).epsilon(1e-13));
  }

  TEST_CASE("punctured disk and point complement") {
    const InfimumResult through_origin = boundary_infimum(PuncturedUnitDisk{}, Point(0.01, 0), Point(0, -0.01));
    CHECK(through_origin.value == Approx(0.02));
    CHECK(through_origin.minimizer == Point(0, 0));
    const InfimumResult outer = boundary_infimum(PuncturedUnitDisk{}, Point(0.9, 0.1), Point(0.9, -0.1));
    CHECK(outer.value == Approx(boundary_infimum(UnitDisk{}, Point(0.9, 0.1), Point(0.9, -0.1)).value));
    const InfimumResult comp = boundary_infimum(PointComplement{Point(1, 0)}, Point(0, 0), Point(1, 1));
    CHECK(comp.value == Approx(2.0));
    CHECK(comp.minimizer == Point(1, 0));
  }

  TEST_CASE("degenerate pair") {
    const InfimumResult r = boundary_infimum(UnitDisk{}, Point(0.3, 0.4), Point(0.3, 0.4));
    CHECK(r.degenerate);
    CHECK(r.value == Approx(1.0));
    CHECK(std::abs(r.minimizer - Point(0.6, 0.8)) < 1e-15);
  }

  TEST_CASE("oracle examples") {
    CHECK(oracle_boundary_infimum(UnitDisk{}, 0.0, 0.5, 4096) == Approx(1.5).epsilon(1e-12));
    CHECK(std::abs(oracle_boundary_infimum(UnitDisk{}, Point(0.6, 0.2), Point(0.6, -0.2), 4096) -
                   0.4 / (0.2 / std::sqrt(0.2))) < 1e-10);
    CHECK(std::abs(oracle_boundary_infimum(UpperHalfPlane{}, Point(0, 1), Point(1, 1), 4096) - std::sqrt(5.0)) <
          1e-10);
    CHECK(code_of([] { oracle_boundary_infimum(UnitDisk{}, 0.0, 0.5, 100); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { oracle_boundary_infimum(UnitDisk{}, 0.0, 2.0, 4096); }) == ErrorCode::PointNotInDomain);
  }

  TEST_CASE("bisector residual") {
    CHECK(bisector_residual(0.0, 0.5, Point(1, 0)) == Approx(0.0));
    CHECK(bisector_residual(0.0, 0.5, Point(0, 1)) == Approx(0.46364760900080612).epsilon(1e-14));
    const InfimumResult r = boundary_infimum(UnitDisk{}, Point(0.2, 0.6), Point(0.2, -0.6));
    CHECK(bisector_residual(Point(0.2, 0.6), Point(0.2, -0.6), r.minimizer) <= 1e-8);
    CHECK(code_of([] { bisector_residual(0.0, 0.5, Point(0.5, 0)); }) == ErrorCode::PointNotOnCircle);
  }

  TEST_CASE("describe round-trips through parse_domain") {
    for (const char* text : {"disk", "halfplane", "punctured", "complement:1-2i", "polygon:-1-1i;1-1i;1+1i;-1+1i"}) {
      CHECK(describe(parse_domain(text)) == text);
    }
  }
}
