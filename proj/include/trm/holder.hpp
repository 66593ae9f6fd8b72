#pragma once

#include <optional>
#include <variant>

#include "trm/domain.hpp"

namespace trm {

/// Distortion bounds for |f(x) - f(y)| under a K-quasiconformal self-map f
/// of the unit disk.
struct HolderReport {
  double K = 1.0;
  double thm_main = 0.0;       // from the exact s(x, y)
  double cor_p = 0.0;          // s replaced by the point pair function
  double cor_collinear = 0.0;  // s replaced by |x-y| / (2-|x+y|), capped at 1
  double cor_hyp = 0.0;        // s replaced by s(x3, y3) of the hyperbolic rotation
  std::optional<double> cor_radial;  // needs |x+y|/2 <= r
  std::optional<double> cor_unit;    // needs |x+y| <= 1
  double best = 0.0;

  /// Bounds above the disk diameter carry no information.
  static bool vacuous(double bound) noexcept { return bound > 2.0; }
};

/// 2^(3 - 1/K) (s / (1 + s^2))^(1/K).
double holder_bound(double s_value, double K);

HolderReport holder_variants(Point x, Point y, double K, std::optional<double> r = std::nullopt);

/// Same, reusing an already computed s(x, y).
HolderReport holder_variants(Point x, Point y, double K, std::optional<double> r, double s_value);

struct MobiusAutomorphism {
  Point a;
  double phase = 0.0;
};

struct RadialStretch {
  double K = 1.0;
};

using TestMap = std::variant<MobiusAutomorphism, RadialStretch>;

/// Known K-quasiconformal self-maps of the disk: z -> e^{i phase} (z-a)/(1-conj(a) z)
/// (K = 1) and z -> |z|^{1/K - 1} z.
Point apply_test_map(const TestMap& map, Point z);

double dilatation(const TestMap& map) noexcept;

}  // namespace trm
