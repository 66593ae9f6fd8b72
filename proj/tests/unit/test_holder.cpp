#include <cmath>
#include <numbers>

#include "doctest.h"
#include "trm/error.hpp"
#include "trm/holder.hpp"
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

}  // namespace

TEST_SUITE("holder") {
  TEST_CASE("holder_bound") {
    CHECK(holder_bound(1.0 / 3.0, 1.0) == Approx(1.2).epsilon(1e-15));
    CHECK(holder_bound(1.0, 1.0) == Approx(2.0).epsilon(1e-15));
    CHECK(holder_bound(0.5, 2.0) == Approx(std::pow(2.0, 2.5) * std::sqrt(0.4)).epsilon(1e-15));
    CHECK(holder_bound(0.5, 2.0) == Approx(3.5777088).epsilon(1e-7));
    CHECK(HolderReport::vacuous(holder_bound(0.5, 2.0)));
    CHECK(code_of([] { holder_bound(0.5, 0.9); }) == ErrorCode::InvalidDilatation);
    CHECK(code_of([] { holder_bound(1.5, 1.0); }) == ErrorCode::InvalidMetricValue);
    CHECK(code_of([] { holder_bound(-0.1, 1.0); }) == ErrorCode::InvalidMetricValue);
  }

  TEST_CASE("bound comparison flips between the two sample pairs") {
    const HolderReport inner = holder_variants(0.3, Point(0, 0.3), 2.0);
    CHECK(inner.cor_collinear < inner.cor_p);
    const HolderReport outer = holder_variants(0.9, Point(0, 0.9), 2.0);
    CHECK(outer.cor_p < outer.cor_collinear);
    CHECK(inner.thm_main == Approx(2.7915761617625077).epsilon(1e-13));
    CHECK(holder_variants(0.3, Point(0, 0.3), 1.0).thm_main == Approx(0.97411218336508683).epsilon(1e-13));
  }

  TEST_CASE("optional corollaries") {
    const HolderReport unit = holder_variants(0.3, -0.3, 1.0);
    REQUIRE(unit.cor_unit.has_value());
    CHECK(*unit.cor_unit == Approx(2.4).epsilon(1e-15));
    CHECK_FALSE(unit.cor_radial.has_value());
    CHECK_FALSE(holder_variants(Point(0.6, 0.1), Point(0.5, 0.2), 1.0).cor_unit.has_value());

    const HolderReport radial = holder_variants(Point(0.2, 0.1), Point(0.4, -0.1), 2.0, 0.5);
    CHECK(radial.cor_radial.has_value());
    CHECK_FALSE(holder_variants(Point(0.2, 0.1), Point(0.4, -0.1), 2.0, 0.1).cor_radial.has_value());
    CHECK(code_of([] { holder_variants(0.2, 0.4, 2.0, 1.0); }) == ErrorCode::PreconditionFailed);
  }

  TEST_CASE("best is the minimum of the present bounds") {
    const HolderReport r = holder_variants(Point(0.2, 0.1), Point(0.4, -0.1), 3.0, 0.5);
    double m = std::min({r.thm_main, r.cor_p, r.cor_collinear, r.cor_hyp});
    if (r.cor_radial) m = std::min(m, *r.cor_radial);
    if (r.cor_unit) m = std::min(m, *r.cor_unit);
    CHECK(r.best == m);
    CHECK(holder_variants(0.4, 0.4, 2.0).best == 0.0);
  }

  TEST_CASE("test maps") {
    const Point z(0.3, -0.4);
    CHECK(apply_test_map(MobiusAutomorphism{0.0, 0.0}, z) == z);
    CHECK(std::abs(apply_test_map(RadialStretch{1.0}, z) - z) < 1e-16);
    CHECK(std::abs(apply_test_map(RadialStretch{2.0}, 0.25) - 0.5) < 1e-16);
    CHECK(apply_test_map(RadialStretch{3.0}, 0.0) == Point(0.0));
    const MobiusAutomorphism m{Point(0.5, 0.2), 1.0};
    CHECK(std::abs(apply_test_map(m, m.a)) < 1e-16);
    CHECK(std::abs(apply_test_map(m, Point(0.99, 0.0))) < 1.0);
    CHECK(dilatation(m) == 1.0);
    CHECK(dilatation(RadialStretch{4.0}) == 4.0);
    CHECK(code_of([] { apply_test_map(RadialStretch{2.0}, 1.0); }) == ErrorCode::PointNotInDomain);
  }
}
