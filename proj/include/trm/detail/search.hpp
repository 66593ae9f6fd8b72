#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace trm::detail {

struct Minimum {
  double arg;
  double value;
};

/// Golden-section search for a minimum of f on [lo, hi]; stops once the
/// bracket is narrower than tol or after max_iter shrinks.
template <class F>
Minimum golden_section(F&& f, double lo, double hi, double tol, int max_iter = 200) {
  constexpr double inv_phi = 0.6180339887498948482;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc <= fd ? Minimum{c, fc} : Minimum{d, fd};
}

/// Number of boundary angles in the coarse circle grid.
inline constexpr std::size_t kCircleGrid = 720;

/// Minimizes g(theta) over the circle: evaluates the kCircleGrid-point grid,
/// refines the three best discrete local minima and every hint angle by
/// golden-section search to 1e-14 in angle, and returns the best refined
/// angle in [0, 2pi). Ties go to the smaller angle. Hints cover minima
/// narrower than the grid, such as the cusp next to a point close to the circle.
template <class G>
Minimum minimize_on_circle(G&& g, std::span<const double> hints = {}) {
  constexpr double step = 2.0 * std::numbers::pi / kCircleGrid;
  std::array<double, kCircleGrid> vals{};
  for (std::size_t i = 0; i < kCircleGrid; ++i) vals[i] = g(step * static_cast<double>(i));

  constexpr std::size_t kStarts = 3;
  std::array<std::size_t, kStarts> best{};
  std::size_t found = 0;
  for (std::size_t i = 0; i < kCircleGrid; ++i) {
    const double v = vals[i];
    const double prev = vals[(i + kCircleGrid - 1) % kCircleGrid];
    const double next = vals[(i + 1) % kCircleGrid];
    if (!(v <= prev && v <= next)) continue;
    std::size_t pos = found < kStarts ? found++ : kStarts;
    if (pos == kStarts) {
      if (!(v < vals[best[kStarts - 1]])) continue;
      pos = kStarts - 1;
    }
    while (pos > 0 && v < vals[best[pos - 1]]) {
      best[pos] = best[pos - 1];
      --pos;
    }
    best[pos] = i;
  }
  if (found == 0 && hints.empty()) {
    // Constant objective.
    return {0.0, vals[0]};
  }

  Minimum result{0.0, INFINITY};
  const auto refine = [&](double center, double at_center) {
    Minimum m = golden_section(g, center - step, center + step, 1e-14);
    if (at_center < m.value) m = {center, at_center};
    double arg = std::fmod(m.arg, 2.0 * std::numbers::pi);
    if (arg < 0.0) arg += 2.0 * std::numbers::pi;
    if (m.value < result.value || (m.value == result.value && arg < result.arg)) {
      result = {arg, m.value};
    }
  };
  for (std::size_t s = 0; s < found; ++s) refine(step * static_cast<double>(best[s]), vals[best[s]]);
  for (const double h : hints) refine(h, g(h));
  return result;
}

}  // namespace trm::detail
