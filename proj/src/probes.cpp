#include "trm/probes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "trm/error.hpp"
#include "trm/metrics.hpp"

namespace trm {

namespace {

constexpr std::array kProbes{
    ProbeInfo{"s-over-b-low", "s/b2", "x = 0, y = eps; limit 1/sqrt(2)"},
    ProbeInfo{"s-over-b-high", "s/b2", "x = 0, y = 1 - eps; limit 1"},
    ProbeInfo{"jstar-over-b-half", "jstar/b2", "k = 1 - eps, x = k, y = k exp(2(1 - k)i); limit 1/2"},
    ProbeInfo{"jstar-over-b-one", "jstar/b2", "x = -(1 - eps), y = 1 - eps; limit 1"},
    ProbeInfo{"p-over-b-max", "p/b2", "x = h, y = -h with h = (sqrt(5) - 1)/2 for every eps; limit (sqrt(10) + sqrt(2))/4"},
    ProbeInfo{"s-over-low-cap", "s/low", "x = 1/2, y = 1/2 + eps; limit (1 + |y|)/(2|y|)"},
    ProbeInfo{"low-over-jstar-sqrt2", "low/jstar", "k = 1 - eps, x = k, y = k exp(2(1 - k)i); limit sqrt(2)"},
    ProbeInfo{"low-over-p-one", "low/p", "k = 1 - eps, x = k, y = -k; limit 1"},
    ProbeInfo{"low-over-b-one", "low/b2", "k = 1 - eps, x = k, y = -k; limit 1"},
};

double b2(Point x, Point y) { return barrlund(UnitDisk{}, 2.0, x, y).value; }
double s(Point x, Point y) { return s_metric(UnitDisk{}, x, y).value; }
double js(Point x, Point y) { return jstar(UnitDisk{}, x, y).value; }
double pp(Point x, Point y) { return point_pair(UnitDisk{}, x, y).value; }

ProbeRow evaluate(std::size_t which, double eps) {
  const double k = 1.0 - eps;
  ProbeRow row;
  row.eps = eps;
  switch (which) {
    case 0:
      row.x = 0.0, row.y = eps;
      row.ratio = s(row.x, row.y) / b2(row.x, row.y);
      row.claimed_limit = 1.0 / std::sqrt(2.0);
      break;
    case 1:
      row.x = 0.0, row.y = k;
      row.ratio = s(row.x, row.y) / b2(row.x, row.y);
      row.claimed_limit = 1.0;
      break;
    case 2:
      // Angle 2(1 - k) minimizes the ratio at first order in 1 - k.
      row.x = k, row.y = std::polar(k, 2.0 * (1.0 - k));
      row.ratio = js(row.x, row.y) / b2(row.x, row.y);
      row.claimed_limit = 0.5;
      break;
    case 3:
      row.x = -k, row.y = k;
      row.ratio = js(row.x, row.y) / b2(row.x, row.y);
      row.claimed_limit = 1.0;
      break;
    case 4: {
      const double h = (std::sqrt(5.0) - 1.0) / 2.0;
      row.x = h, row.y = -h;
      row.ratio = pp(row.x, row.y) / b2(row.x, row.y);
      row.claimed_limit = (std::sqrt(10.0) + std::sqrt(2.0)) / 4.0;
      break;
    }
    case 5:
      row.x = 0.5, row.y = 0.5 + eps;
      row.ratio = s(row.x, row.y) / low(row.x, row.y).value;
      row.claimed_limit = (1.0 + std::abs(row.y)) / (2.0 * std::abs(row.y));
      break;
    case 6:
      row.x = k, row.y = std::polar(k, 2.0 * (1.0 - k));
      row.ratio = low(row.x, row.y).value / js(row.x, row.y);
      row.claimed_limit = std::sqrt(2.0);
      break;
    case 7:
      row.x = k, row.y = -k;
      row.ratio = low(row.x, row.y).value / pp(row.x, row.y);
      row.claimed_limit = 1.0;
      break;
    default:
      row.x = k, row.y = -k;
      row.ratio = low(row.x, row.y).value / b2(row.x, row.y);
      row.claimed_limit = 1.0;
      break;
  }
  row.gap = row.ratio - row.claimed_limit;
  return row;
}

}  // namespace

std::span<const ProbeInfo> probe_catalog() noexcept { return kProbes; }

ProbeTable sharpness_probe(std::string_view probe_id, std::span<const double> eps) {
  const auto it = std::find_if(kProbes.begin(), kProbes.end(), [&](const ProbeInfo& p) { return p.id == probe_id; });
  if (it == kProbes.end()) throw Error(ErrorCode::UnknownProbe, "unknown probe '" + std::string(probe_id) + "'");
  ProbeTable table{&*it, {}};
  for (const double e : eps) {
    if (!(e > 0.0 && e < 0.5)) {
      throw Error(ErrorCode::InvalidConfig, "probe eps must lie in (0, 1/2), got " + format_real(e));
    }
    table.rows.push_back(evaluate(static_cast<std::size_t>(it - kProbes.begin()), e));
  }
  return table;
}

}  // namespace trm
