// Reference implementation of the boundary infimum used to check the
// production solver. It deliberately shares no search code with
// boundary.cpp: different sampling grid, different parameterizations and
// Boost's Brent minimizer for refinement.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "trm/boundary.hpp"
#include "trm/error.hpp"

namespace trm {

namespace {

constexpr std::size_t kRefineStarts = 4;

// Minimizes f over [lo, hi) sampled at n midpoints, refining the best
// discrete local minima and every extra start with Brent's method.
// `periodic` wraps the ends. Extra starts are the parameters of the points'
// nearest boundary points: a point close to the boundary puts a minimum
// there that is narrower than the sampling step.
double sample_and_refine(const std::function<double(double)>& f, double lo, double hi, std::size_t n,
                         bool periodic, std::vector<double> extra = {}) {
  const double h = (hi - lo) / static_cast<double>(n);
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = f(lo + h * (static_cast<double>(i) + 0.5));

  std::vector<std::size_t> minima;
  for (std::size_t i = 0; i < n; ++i) {
    const bool has_prev = periodic || i > 0;
    const bool has_next = periodic || i + 1 < n;
    const double prev = has_prev ? vals[(i + n - 1) % n] : INFINITY;
    const double next = has_next ? vals[(i + 1) % n] : INFINITY;
    if (vals[i] <= prev && vals[i] <= next) minima.push_back(i);
  }
  std::sort(minima.begin(), minima.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  if (minima.size() > kRefineStarts) minima.resize(kRefineStarts);

  double best = *std::min_element(vals.begin(), vals.end());
  std::vector<double> starts;
  for (std::size_t i : minima) starts.push_back(lo + h * (static_cast<double>(i) + 0.5));
  starts.insert(starts.end(), extra.begin(), extra.end());
  for (const double mid : starts) {
    best = std::min(best, f(mid));
    double a = mid - h;
    double b = mid + h;
    if (!periodic) {
      a = std::max(a, lo);
      b = std::min(b, hi);
    }
    std::uintmax_t iters = 500;
    auto r = boost::math::tools::brent_find_minima(f, a, b, std::numeric_limits<double>::digits, iters);
    best = std::min(best, r.second);
    // Brent's abscissa tolerance has an absolute floor near 1e-8, too coarse
    // for cusp minima. Repeat on a rescaled, shrinking window around the
    // current best.
    double c = r.first;
    for (double reach = h; reach > 1e-12; reach *= 1e-3) {
      const double span = periodic ? reach : std::min({reach, c - lo, hi - c});
      if (!(span > 0.0)) break;
      const auto g = [&](double u) { return f(c + u * span); };
      iters = 500;
      r = boost::math::tools::brent_find_minima(g, -1.0, 1.0, std::numeric_limits<double>::digits, iters);
      if (r.second < best) best = r.second;
      if (r.second <= f(c)) c += r.first * span;
    }
  }
  return best;
}

double disk_oracle(Point x, Point y, std::size_t n) {
  const auto f = [x, y](double t) {
    const Point z(std::cos(t), std::sin(t));
    return std::abs(x - z) + std::abs(z - y);
  };
  return sample_and_refine(f, 0.0, 2.0 * std::numbers::pi, n, true, {std::arg(x), std::arg(y)});
}

}  // namespace

double oracle_boundary_infimum(const Domain& domain, Point x, Point y, std::size_t resolution) {
  require_inside(domain, x, "x");
  require_inside(domain, y, "y");
  if (resolution < 1024) throw Error(ErrorCode::InvalidConfig, "oracle resolution must be >= 1024");

  if (std::holds_alternative<UnitDisk>(domain)) return disk_oracle(x, y, resolution);
  if (std::holds_alternative<PuncturedUnitDisk>(domain)) {
    return std::min(disk_oracle(x, y, resolution), std::abs(x) + std::abs(y));
  }
  if (const auto* c = std::get_if<PointComplement>(&domain)) {
    return std::abs(x - c->excluded) + std::abs(c->excluded - y);
  }
  if (std::holds_alternative<UpperHalfPlane>(domain)) {
    // Real axis through the tangent map X = c + w tan(phi).
    const double c = 0.5 * (x.real() + y.real());
    const double w = std::max({std::abs(x - y), x.imag() + y.imag(), 1.0});
    const auto f = [=](double phi) {
      const Point z(c + w * std::tan(phi), 0.0);
      return std::abs(x - z) + std::abs(z - y);
    };
    const double edge = std::numbers::pi / 2.0;
    return sample_and_refine(f, -edge, edge, resolution, false,
                             {std::atan((x.real() - c) / w), std::atan((y.real() - c) / w)});
  }

  const auto& poly = std::get<ConvexPolygon>(domain);
  std::vector<double> cumulative{0.0};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    cumulative.push_back(cumulative.back() + std::abs(poly.vertex(i + 1) - poly.vertex(i)));
  }
  const double perimeter = cumulative.back();
  const auto at = [&](double s) {
    s = std::fmod(s, perimeter);
    if (s < 0.0) s += perimeter;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
    const std::size_t e = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()) - 1, poly.size() - 1);
    const Point a = poly.vertex(e);
    const Point b = poly.vertex(e + 1);
    return a + (b - a) * ((s - cumulative[e]) / (cumulative[e + 1] - cumulative[e]));
  };
  const auto f = [&](double s) {
    const Point z = at(s);
    return std::abs(x - z) + std::abs(z - y);
  };
  std::vector<double> feet;
  for (std::size_t e = 0; e < poly.size(); ++e) {
    const Point a = poly.vertex(e);
    const Point d = poly.vertex(e + 1) - a;
    for (const Point p : {x, y}) {
      const double along = std::clamp(((p - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
      feet.push_back(cumulative[e] + along * (cumulative[e + 1] - cumulative[e]));
    }
  }
  double best = sample_and_refine(f, 0.0, perimeter, resolution, true, std::move(feet));
  for (const Point& v : poly.vertices()) best = std::min(best, std::abs(x - v) + std::abs(v - y));
  return best;
}

}  // namespace trm
