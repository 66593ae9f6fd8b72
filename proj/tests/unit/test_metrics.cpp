#include <cmath>
#include <numbers>

#include "doctest.h"
#include "trm/error.hpp"
#include "trm/metrics.hpp"

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

double s(Point x, Point y) { return s_metric(UnitDisk{}, x, y).value; }

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("s_metric examples") {
    CHECK(s(0.0, 0.5) == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(s(Point(0.2, 0.6), Point(0.2, -0.6)) == Approx(std::sqrt(0.4)).epsilon(1e-15));
    CHECK(s(Point(0.6, 0.2), Point(0.6, -0.2)) == Approx(0.2 / std::sqrt(0.2)).epsilon(1e-15));
    CHECK(s_metric(UpperHalfPlane{}, Point(0, 1), Point(1, 1)).value == Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(s(Point(0.3, 0.1), Point(-0.2, 0.4)) == Approx(0.3687817782917155).epsilon(1e-13));
    CHECK(s(Point(0.5, 0.683), Point(0.3, 0.117)) == Approx(0.66883633390794763).epsilon(1e-13));
    CHECK(s(Point(0.7, 0.1), Point(-0.1, -0.8)) == Approx(0.78930956861495703).epsilon(1e-13));
    CHECK(s(Point(0.95, 0.2), Point(0.1, -0.97)) == Approx(0.97504263947985593).epsilon(1e-13));
    CHECK(s(0.3, Point(0, 0.3)) == Approx(0.2599891703620019).epsilon(1e-14));
    CHECK(s(0.9, Point(0, 0.9)) == Approx(0.9).epsilon(1e-14));
    CHECK(s(Point(0.1, 0.2), Point(0.1, 0.2)) == 0.0);
    const MetricValue v = s_metric(UnitDisk{}, Point(0.3, 0.1), Point(-0.2, 0.4));
    REQUIRE(v.detail.has_value());
    CHECK(std::abs(std::abs(v.detail->minimizer) - 1.0) < 1e-12);
  }

  TEST_CASE("s_disk_special") {
    const auto collinear = s_disk_special(0.2, 0.6);
    REQUIRE(collinear.has_value());
    CHECK(collinear->value == Approx(1.0 / 3.0).epsilon(1e-15));
    const auto conj = s_disk_special(Point(0.2, 0.6), Point(0.2, -0.6));
    REQUIRE(conj.has_value());
    CHECK(conj->value == Approx(std::sqrt(0.4)).epsilon(1e-15));
    CHECK_FALSE(s_disk_special(Point(0.5, 0.1), Point(0.4, -0.3)).has_value());
  }

  TEST_CASE("jstar and point_pair") {
    CHECK(jstar(UnitDisk{}, 0.0, 0.5).value == Approx(1.0 / 3.0));
    CHECK(jstar(UnitDisk{}, -0.5, 0.5).value == Approx(0.5));
    CHECK(jstar(UnitDisk{}, 0.4, 0.4).value == 0.0);
    CHECK(point_pair(UnitDisk{}, 0.0, 0.5).value == Approx(1.0 / 3.0));
    CHECK(point_pair(UnitDisk{}, -0.5, 0.5).value == Approx(1.0 / std::sqrt(2.0)));
    CHECK(point_pair(UnitDisk{}, 0.4, 0.4).value == 0.0);
    CHECK(code_of([] { jstar(UnitDisk{}, 0.0, 1.5); }) == ErrorCode::PointNotInDomain);
  }

  TEST_CASE("barrlund") {
    CHECK(barrlund(UnitDisk{}, 2.0, 0.0, 0.5).value == Approx(0.5 / std::sqrt(1.25)).epsilon(1e-15));
    CHECK(barrlund(UnitDisk{}, 2.0, -0.5, 0.5).value == Approx(1.0 / std::sqrt(2.5)).epsilon(1e-15));
    CHECK(barrlund(UnitDisk{}, 3.0, Point(0.3, 0.1), Point(-0.2, 0.4)).value ==
          Approx(0.57592697243597464).epsilon(1e-12));
    // Closed form against the generic boundary search, which p = 2.0000001 forces.
    CHECK(barrlund(UnitDisk{}, 2.0, Point(0.3, 0.1), Point(-0.2, 0.4)).value ==
          Approx(0.51534872874344472).epsilon(1e-14));
    CHECK(barrlund(UnitDisk{}, 2.0 + 1e-12, Point(0.3, 0.1), Point(-0.2, 0.4)).value ==
          Approx(0.51534872874344472).epsilon(1e-9));
    CHECK(code_of([] { barrlund(UnitDisk{}, 0.5, 0.0, 0.5); }) == ErrorCode::InvalidExponent);
    CHECK(barrlund(UpperHalfPlane{}, 1.0, Point(0, 1), Point(1, 1)).value == Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
  }

  TEST_CASE("barrlund closed form stays accurate near the circle") {
    const double k = 1.0 - 1e-6;
    const Point x = k;
    const Point y = std::polar(k, 2e-6);
    const double ratio = jstar(UnitDisk{}, x, y).value / barrlund(UnitDisk{}, 2.0, x, y).value;
    CHECK(ratio == Approx(0.50000012500007813).epsilon(1e-9));
  }

  TEST_CASE("low") {
    CHECK(low(0.3, -0.1).value == Approx(0.4 / (10.0 / 3.0 + 0.1)).epsilon(1e-15));
    CHECK(low(0.3, -0.1).value == Approx(0.117).epsilon(1e-2));
    CHECK(low(0.1, -0.1).value == Approx(0.2 / 10.1).epsilon(1e-15));
    CHECK(low(0.3, 0.1).value == Approx(0.0618557).epsilon(1e-6));
    CHECK(low(Point(0.2, 0.2), Point(0.2, 0.2)).value == 0.0);
    CHECK(code_of([] { low(0.0, 0.5); }) == ErrorCode::OriginNotAllowed);
    // The triangle inequality fails for low.
    CHECK(low(0.3, -0.1).value > low(0.3, 0.1).value + low(0.1, -0.1).value);
  }

  TEST_CASE("rho as a metric value") {
    CHECK(rho(UnitDisk{}, 0.0, 0.5).value == Approx(std::log(3.0)));
    CHECK(code_of([] { rho(PuncturedUnitDisk{}, 0.1, 0.5); }) == ErrorCode::UnsupportedDomain);
  }

  TEST_CASE("starlike_upper_bound") {
    CHECK(starlike_upper_bound(UnitDisk{}, 0.7, -0.7) == Approx(0.99372972528449423).epsilon(1e-14));
    CHECK(starlike_upper_bound(UnitDisk{}, 0.5, -0.6) == Approx(0.94845866991092588).epsilon(1e-14));
    CHECK(starlike_upper_bound(UnitDisk{}, 0.7, -0.7) >= s(0.7, -0.7));
    CHECK(code_of([] { starlike_upper_bound(UnitDisk{}, 0.0, 0.5); }) == ErrorCode::PreconditionFailed);
    CHECK(code_of([] { starlike_upper_bound(PuncturedUnitDisk{}, 0.7, -0.7); }) == ErrorCode::UnsupportedDomain);
  }

  TEST_CASE("ball_s_diameter") {
    CHECK(ball_s_diameter(UnitDisk{}, 0.0, 0.3) == Approx(0.3));
    CHECK(ball_s_diameter(UnitDisk{}, Point(0.4, 0.4), 0.3) == Approx(0.3 / (1 - 0.4 * std::sqrt(2.0))).epsilon(1e-14));
    CHECK(ball_s_diameter(UpperHalfPlane{}, Point(0, 1), 0.5) == Approx(0.5));
    CHECK(code_of([] { ball_s_diameter(UnitDisk{}, 0.5, 0.5); }) == ErrorCode::BallNotContained);
    CHECK(code_of([] { ball_s_diameter(UnitDisk{}, 0.5, -0.1); }) == ErrorCode::BallNotContained);
  }

  TEST_CASE("collinear bound") {
    CHECK(collinear_bound(0.2, 0.6) == Approx(1.0 / 3.0));
    CHECK(collinear_bound(Point(0.3, 0.1), Point(-0.2, 0.4)) >= s(Point(0.3, 0.1), Point(-0.2, 0.4)));
  }
}
