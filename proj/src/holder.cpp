#include "trm/holder.hpp"

#include <algorithm>
#include <cmath>

#include "trm/error.hpp"
#include "trm/hyperbolic.hpp"
#include "trm/metrics.hpp"
#include "trm/rotations.hpp"

namespace trm {

namespace {

void require_dilatation(double K) {
  if (!(K >= 1.0) || !std::isfinite(K)) {
    throw Error(ErrorCode::InvalidDilatation, "maximal dilatation must be a finite K >= 1, got " + format_real(K));
  }
}

}  // namespace

double holder_bound(double s_value, double K) {
  require_dilatation(K);
  if (!(s_value >= 0.0 && s_value <= 1.0)) {
    throw Error(ErrorCode::InvalidMetricValue, "s value must lie in [0, 1], got " + format_real(s_value));
  }
  return std::pow(2.0, 3.0 - 1.0 / K) * std::pow(s_value / (1.0 + s_value * s_value), 1.0 / K);
}

HolderReport holder_variants(Point x, Point y, double K, std::optional<double> r) {
  require_dilatation(K);
  return holder_variants(x, y, K, r, s_metric(UnitDisk{}, x, y).value);
}

HolderReport holder_variants(Point x, Point y, double K, std::optional<double> r, double s_value) {
  require_dilatation(K);
  require_inside(UnitDisk{}, x, "x");
  require_inside(UnitDisk{}, y, "y");
  const double inv_k = 1.0 / K;
  const double d = std::abs(x - y);
  const double sum = std::abs(x + y);
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  const double outer = std::pow(2.0, 3.0 - 2.0 * inv_k);

  HolderReport rep;
  rep.K = K;
  rep.thm_main = holder_bound(s_value, K);

  const double gaps = (1.0 - ax) * (1.0 - ay);
  rep.cor_p = x == y ? 0.0
                     : outer * std::pow(std::sqrt(d * d + 4.0 * gaps) * d / (d * d + 2.0 * gaps), inv_k);

  // s/(1+s^2) only increases on [0, 1], so the collinear bound is capped at 1.
  if (d < 2.0 - sum) {
    rep.cor_collinear = outer * std::pow((2.0 - sum) * d / (2.0 - 2.0 * sum + ax * ax + ay * ay), inv_k);
  } else {
    rep.cor_collinear = outer;
  }

  if (x == y) {
    rep.cor_hyp = 0.0;
  } else {
    const double upper = hyperbolic_bounds(x, y).upper;
    rep.cor_hyp = holder_bound(std::min(upper, 1.0), K);
  }

  if (r) {
    if (*r >= 1.0 || !(*r >= 0.0)) {
      throw Error(ErrorCode::PreconditionFailed, "radial corollary needs 0 <= r < 1");
    }
    if (sum / 2.0 <= *r) rep.cor_radial = outer * std::pow(d / (1.0 - *r), inv_k);
  }
  if (sum <= 1.0) rep.cor_unit = std::pow(2.0, 3.0 - inv_k) * std::pow(d, inv_k);

  rep.best = std::min({rep.thm_main, rep.cor_p, rep.cor_collinear, rep.cor_hyp});
  if (rep.cor_radial) rep.best = std::min(rep.best, *rep.cor_radial);
  if (rep.cor_unit) rep.best = std::min(rep.best, *rep.cor_unit);
  return rep;
}

Point apply_test_map(const TestMap& map, Point z) {
  require_inside(UnitDisk{}, z, "z");
  if (const auto* m = std::get_if<MobiusAutomorphism>(&map)) {
    require_inside(UnitDisk{}, m->a, "a");
    return std::polar(1.0, m->phase) * (z - m->a) / (1.0 - std::conj(m->a) * z);
  }
  const double K = std::get<RadialStretch>(map).K;
  require_dilatation(K);
  const double mod = std::abs(z);
  if (mod == 0.0) return z;
  return z * std::pow(mod, 1.0 / K - 1.0);
}

double dilatation(const TestMap& map) noexcept {
  if (std::holds_alternative<MobiusAutomorphism>(map)) return 1.0;
  return std::get<RadialStretch>(map).K;
}

}  // namespace trm
