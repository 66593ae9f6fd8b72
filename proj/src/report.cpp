#include "trm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "trm/error.hpp"
#include "trm/holder.hpp"
#include "trm/hyperbolic.hpp"
#include "trm/metrics.hpp"
#include "trm/rotations.hpp"

namespace trm {

namespace {

using Json = nlohmann::ordered_json;

std::string real17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Short form for text output.
std::string real10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// nlohmann's dump prints the shortest round-trip form; reports use a fixed
// 17 significant digits and null for non-finite values instead.
void dump(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(key).dump() + ": ";
        dump(value, out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += inner;
        dump(j[i], out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? real17(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

std::string to_json_text(const Json& j) {
  std::string out;
  dump(j, out, 0);
  return out + "\n";
}

Json point_json(Point p) { return Json{{"re", p.real()}, {"im", p.imag()}}; }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string csv_cell(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_real(const std::optional<double>& v) { return v && std::isfinite(*v) ? real17(*v) : ""; }

template <class T>
std::string csv_opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "";
}

std::string text_opt(const std::optional<double>& v) { return v ? real10(*v) : "-"; }

// ---- verification suites ----

Json suite_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const CheckSummary& c : r.checks) {
    checks.push_back({{"id", c.spec->id},
                      {"invariant", c.spec->invariant},
                      {"statement", c.spec->statement},
                      {"tolerance", c.tolerance},
                      {"monitored", c.spec->monitored},
                      {"evaluated", c.evaluated},
                      {"violations", c.violations},
                      {"noise", c.noise},
                      {"min_slack", optional_json(c.min_slack)},
                      {"min_index", optional_json(c.min_index)}});
  }
  Json violations = Json::array();
  for (const ViolationRecord& v : r.violations) {
    violations.push_back({{"index", v.index},
                          {"check", v.check},
                          {"x", point_json(v.x)},
                          {"y", point_json(v.y)},
                          {"slack", v.slack},
                          {"reproduce", v.reproduce}});
  }
  return Json{{"suite", to_string(r.suite)},
              {"domain", describe(r.domain)},
              {"samples", r.samples},
              {"seed", r.seed},
              {"tolerance", r.tolerance},
              {"index", optional_json(r.only_index)},
              {"sampling", r.sampling},
              {"all_pass", r.all_pass()},
              {"violation_count", r.violation_count},
              {"min_slack", optional_json(r.min_slack)},
              {"max_ratio", {{"label", r.ratio_label},
                             {"value", optional_json(r.max_ratio)},
                             {"index", optional_json(r.max_ratio_index)}}},
              {"checks", std::move(checks)},
              {"violations", std::move(violations)},
              {"runtime_s", r.runtime_s}};
}

constexpr std::string_view kSuiteCsvHeader =
    "suite,domain,samples,seed,check,invariant,tolerance,monitored,evaluated,violations,noise,min_slack,min_index";

std::string suites_csv(const std::vector<SuiteReport>& reports) {
  std::string out = std::string(kSuiteCsvHeader) + "\n";
  for (const SuiteReport& r : reports) {
    for (const CheckSummary& c : r.checks) {
      out += std::string(to_string(r.suite)) + "," + csv_cell(describe(r.domain)) + "," + std::to_string(r.samples) +
             "," + std::to_string(r.seed) + "," + std::string(c.spec->id) + "," + std::string(c.spec->invariant) + "," +
             real17(c.tolerance) + "," + (c.spec->monitored ? "1" : "0") + "," + std::to_string(c.evaluated) + "," +
             std::to_string(c.violations) + "," + std::to_string(c.noise) + "," + csv_real(c.min_slack) + "," +
             csv_opt(c.min_index) + "\n";
    }
  }
  return out;
}

std::string suites_text(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  for (const SuiteReport& r : reports) {
    out << "suite " << to_string(r.suite) << " on " << describe(r.domain) << ": " << r.samples << " samples, seed "
        << r.seed << ", tolerance " << real10(r.tolerance);
    if (r.only_index) out << ", index " << *r.only_index;
    out << "  " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
    out << "  sampling: " << r.sampling << "\n";
    char line[256];
    std::snprintf(line, sizeof line, "  %-46s %10s %10s %8s %12s\n", "check", "evaluated", "violations", "noise",
                  "min slack");
    out << line;
    for (const CheckSummary& c : r.checks) {
      const std::string id = std::string(c.spec->id) + (c.spec->monitored ? " (monitored)" : "");
      std::snprintf(line, sizeof line, "  %-46s %10llu %10llu %8llu %12s\n", id.c_str(),
                    static_cast<unsigned long long>(c.evaluated), static_cast<unsigned long long>(c.violations),
                    static_cast<unsigned long long>(c.noise), text_opt(c.min_slack).c_str());
      out << line;
    }
    if (r.max_ratio) {
      out << "  max " << r.ratio_label << " = " << real10(*r.max_ratio) << " at index " << *r.max_ratio_index << "\n";
    }
    for (const ViolationRecord& v : r.violations) {
      out << "  violation " << v.check << " at index " << v.index << ": x = " << format_point(v.x)
          << ", y = " << format_point(v.y) << ", slack " << real17(v.slack) << "\n    " << v.reproduce << "\n";
    }
    if (r.violation_count > r.violations.size()) {
      out << "  (" << r.violation_count - r.violations.size() << " more violations not listed)\n";
    }
    out << "  runtime " << real10(r.runtime_s) << " s\n";
  }
  return out.str();
}

// ---- probes ----

std::string probe_text(const ProbeTable& t) {
  std::ostringstream out;
  out << "probe " << t.info->id << ": " << t.info->ratio << ", " << t.info->family << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "  %-12s %-20s %-20s %-20s %s\n", "eps", "ratio", "claimed limit", "gap", "pair");
  out << line;
  for (const ProbeRow& row : t.rows) {
    const std::string pair = format_point(row.x) + ", " + format_point(row.y);
    std::snprintf(line, sizeof line, "  %-12g %-20.15g %-20.15g %-20.6g %s\n", row.eps, row.ratio, row.claimed_limit,
                  row.gap, pair.c_str());
    out << line;
  }
  return out.str();
}

Json probe_json(const ProbeTable& t) {
  Json rows = Json::array();
  for (const ProbeRow& row : t.rows) {
    rows.push_back({{"eps", row.eps},
                    {"x", point_json(row.x)},
                    {"y", point_json(row.y)},
                    {"ratio", row.ratio},
                    {"claimed_limit", row.claimed_limit},
                    {"gap", row.gap}});
  }
  return Json{{"schema", kReportSchema},
              {"kind", "probe"},
              {"probe", t.info->id},
              {"ratio", t.info->ratio},
              {"family", t.info->family},
              {"rows", std::move(rows)}};
}

constexpr std::string_view kProbeCsvHeader = "probe,eps,x_re,x_im,y_re,y_im,ratio,claimed_limit,gap";

std::string probe_csv(const ProbeTable& t) {
  std::string out = std::string(kProbeCsvHeader) + "\n";
  for (const ProbeRow& r : t.rows) {
    out += std::string(t.info->id) + "," + real17(r.eps) + "," + real17(r.x.real()) + "," + real17(r.x.imag()) + "," +
           real17(r.y.real()) + "," + real17(r.y.imag()) + "," + real17(r.ratio) + "," + real17(r.claimed_limit) +
           "," + real17(r.gap) + "\n";
  }
  return out;
}

// ---- conjecture explorer ----

Json conjecture_json(const ConjectureReport& r) {
  Json claims = Json::array();
  for (const ClaimSummary& c : r.claims) {
    claims.push_back({{"claim", c.claim},
                      {"statement", c.statement},
                      {"evaluated", c.evaluated},
                      {"counterexamples", c.counterexamples},
                      {"min_slack", optional_json(c.min_slack)},
                      {"min_index", optional_json(c.min_index)},
                      {"min_x", c.min_slack ? point_json(c.min_x) : Json(nullptr)},
                      {"min_y", c.min_slack ? point_json(c.min_y) : Json(nullptr)}});
  }
  Json records = Json::array();
  for (const Counterexample& ce : r.counterexamples) {
    records.push_back({{"index", ce.index},
                       {"claim", ce.claim},
                       {"x", point_json(ce.x)},
                       {"y", point_json(ce.y)},
                       {"lhs", ce.lhs},
                       {"rhs", ce.rhs},
                       {"slack", ce.slack},
                       {"reproduce", ce.reproduce}});
  }
  return Json{{"schema", kReportSchema},
              {"kind", "explore-conjecture"},
              {"samples", r.samples},
              {"seed", r.seed},
              {"tolerance", r.tolerance},
              {"index", optional_json(r.only_index)},
              {"sampling", r.sampling},
              {"counterexample_count", r.counterexample_count},
              {"claims", std::move(claims)},
              {"counterexamples", std::move(records)},
              {"runtime_s", r.runtime_s}};
}

constexpr std::string_view kConjectureCsvHeader =
    "claim,statement,evaluated,counterexamples,min_slack,min_index,x_re,x_im,y_re,y_im";

std::string conjecture_csv(const ConjectureReport& r) {
  std::string out = std::string(kConjectureCsvHeader) + "\n";
  for (const ClaimSummary& c : r.claims) {
    out += std::to_string(c.claim) + "," + csv_cell(c.statement) + "," + std::to_string(c.evaluated) + "," +
           std::to_string(c.counterexamples) + "," + csv_real(c.min_slack) + "," + csv_opt(c.min_index);
    if (c.min_slack) {
      out += "," + real17(c.min_x.real()) + "," + real17(c.min_x.imag()) + "," + real17(c.min_y.real()) + "," +
             real17(c.min_y.imag());
    } else {
      out += ",,,,";
    }
    out += "\n";
  }
  return out;
}

std::string conjecture_text(const ConjectureReport& r) {
  std::ostringstream out;
  out << "conjecture scan: " << r.samples << " samples, seed " << r.seed << ", tolerance " << real10(r.tolerance);
  if (r.only_index) out << ", index " << *r.only_index;
  out << "\n  sampling: " << r.sampling << "\n";
  for (const ClaimSummary& c : r.claims) {
    out << "  claim " << c.claim << ": " << c.statement << "\n    evaluated " << c.evaluated << ", counterexamples "
        << c.counterexamples << ", min slack " << text_opt(c.min_slack);
    if (c.min_slack) {
      out << " at index " << *c.min_index << " (x = " << format_point(c.min_x) << ", y = " << format_point(c.min_y)
          << ")";
    }
    out << "\n";
  }
  for (const Counterexample& ce : r.counterexamples) {
    out << "  counterexample to claim " << ce.claim << " at index " << ce.index << ": x = " << format_point(ce.x)
        << ", y = " << format_point(ce.y) << ", slack " << real17(ce.slack) << "\n    " << ce.reproduce << "\n";
  }
  out << "  " << (r.found_counterexample() ? "COUNTEREXAMPLE FOUND" : "no counterexamples") << "\n";
  out << "  runtime " << real10(r.runtime_s) << " s\n";
  return out.str();
}

// ---- single-pair queries ----

struct NamedValue {
  std::string name;
  double value;
};

MetricValue evaluate(const Domain& domain, const MetricSpec& spec, Point x, Point y) {
  switch (spec.metric) {
    case Metric::S: return s_metric(domain, x, y);
    case Metric::JStar: return jstar(domain, x, y);
    case Metric::PointPair: return point_pair(domain, x, y);
    case Metric::Barrlund: return barrlund(domain, spec.exponent, x, y);
    case Metric::Low:
      if (!std::holds_alternative<PuncturedUnitDisk>(domain) && !std::holds_alternative<UnitDisk>(domain)) {
        throw Error(ErrorCode::UnsupportedDomain, "low is defined on the punctured unit disk only");
      }
      return low(x, y);
    case Metric::Rho: return rho(domain, x, y);
  }
  throw Error(ErrorCode::InvalidConfig, "unknown metric");
}

std::string metric_label(const MetricSpec& spec) {
  if (spec.metric == Metric::Barrlund) return "barrlund:" + real10(spec.exponent);
  return std::string(to_string(spec.metric));
}

struct BoundEntry {
  std::string_view name;
  double value;
  int side;  // -1 lower bound of s, +1 upper bound of s
};

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidConfig, "unknown format '" + std::string(text) + "'; expected text, json or csv");
}

RotationMode parse_rotation_mode(std::string_view text) {
  if (text == "euclidean") return RotationMode::Euclidean;
  if (text == "hyperbolic") return RotationMode::Hyperbolic;
  throw Error(ErrorCode::InvalidConfig,
              "unknown rotation mode '" + std::string(text) + "'; expected euclidean or hyperbolic");
}

std::string render(const std::vector<SuiteReport>& reports, Format format) {
  switch (format) {
    case Format::Text: return suites_text(reports);
    case Format::Csv: return suites_csv(reports);
    case Format::Json: break;
  }
  Json suites = Json::array();
  bool pass = true;
  double runtime = 0.0;
  for (const SuiteReport& r : reports) {
    suites.push_back(suite_json(r));
    pass = pass && r.all_pass();
    runtime += r.runtime_s;
  }
  return to_json_text(Json{{"schema", kReportSchema},
                           {"kind", "verify"},
                           {"all_pass", pass},
                           {"suites", std::move(suites)},
                           {"runtime_s", runtime}});
}

std::string render(const ProbeTable& table, Format format) {
  switch (format) {
    case Format::Text: return probe_text(table);
    case Format::Csv: return probe_csv(table);
    case Format::Json: return to_json_text(probe_json(table));
  }
  return {};
}

std::string render(const ConjectureReport& report, Format format) {
  switch (format) {
    case Format::Text: return conjecture_text(report);
    case Format::Csv: return conjecture_csv(report);
    case Format::Json: return to_json_text(conjecture_json(report));
  }
  return {};
}

std::string dist_report(const Domain& domain, const MetricSpec& metric, Point x, Point y, Format format) {
  const MetricValue v = evaluate(domain, metric, x, y);
  const std::string label = metric_label(metric);
  if (format == Format::Json) {
    Json j{{"schema", kReportSchema},
           {"kind", "dist"},
           {"metric", label},
           {"domain", describe(domain)},
           {"x", point_json(x)},
           {"y", point_json(y)},
           {"value", v.value}};
    if (v.detail) {
      j["infimum"] = {{"value", v.detail->value},
                      {"minimizer", point_json(v.detail->minimizer)},
                      {"method", to_string(v.detail->method)},
                      {"residual", v.detail->residual},
                      {"degenerate", v.detail->degenerate}};
    }
    if (v.extremal) j["extremal"] = point_json(*v.extremal);
    return to_json_text(j);
  }
  if (format == Format::Csv) {
    return "metric,domain,x_re,x_im,y_re,y_im,value\n" + csv_cell(label) + "," + csv_cell(describe(domain)) + "," +
           real17(x.real()) + "," + real17(x.imag()) + "," + real17(y.real()) + "," + real17(y.imag()) + "," +
           real17(v.value) + "\n";
  }
  std::string out = real17(v.value) + "\n";
  if (v.detail && !v.detail->degenerate) {
    out += "  infimum " + real17(v.detail->value) + " at " + format_point(v.detail->minimizer) + " (" +
           std::string(to_string(v.detail->method)) + ")\n";
  }
  if (v.extremal) out += "  extremal boundary point " + format_point(*v.extremal) + "\n";
  return out;
}

std::string bounds_report(Point x, Point y, Format format) {
  const Domain disk = UnitDisk{};
  require_inside(disk, x, "x");
  require_inside(disk, y, "y");
  if (x == y) throw Error(ErrorCode::DegenerateInput, "bounds need distinct points");
  const double s = s_metric(disk, x, y).value;
  const double quarter = quarter_param(x, y);
  const double half = th_half_rho(x, y);
  const double js = jstar(disk, x, y).value;
  const double p = point_pair(disk, x, y).value;
  const double b2 = barrlund(disk, 2.0, x, y).value;
  const EuclideanBounds e = euclidean_bounds(x, y);
  const HyperbolicBounds h = hyperbolic_bounds(x, y);

  std::vector<BoundEntry> entries{
      {"th(rho/4)", quarter, -1},
      {"jstar", js, -1},
      {"b2/sqrt(2)", b2 / std::numbers::sqrt2, -1},
      {"euclid_closed", e.lower_closed, -1},
      {"euclid_lower", e.lower, -1},
      {"hyp_lower", h.lower, -1},
      {"hyp_upper", h.upper, 1},
      {"collinear", e.collinear, 1},
      {"p", p, 1},
      {"b2", b2, 1},
      {"th(rho/2)", half, 1},
      {"2th(rho/4)", 2.0 * quarter, 1},
  };
  if (x != Point(0.0, 0.0) && y != Point(0.0, 0.0)) entries.insert(entries.begin() + 2, {"low", low(x, y).value, -1});
  if (e.upper) entries.insert(entries.end() - 5, {"euclid_upper", *e.upper, 1});

  // th(rho/4) <= j* <= s <= p <= th(rho/2) <= 2 th(rho/4)
  const double chain[] = {quarter, js, s, p, half, 2.0 * quarter};
  const bool chain_holds = std::is_sorted(std::begin(chain), std::end(chain));
  const auto holds = [s](const BoundEntry& b) { return b.side < 0 ? b.value <= s : b.value >= s; };

  if (format == Format::Json) {
    Json lower = Json::array();
    Json upper = Json::array();
    for (const BoundEntry& b : entries) {
      (b.side < 0 ? lower : upper).push_back({{"name", b.name}, {"value", b.value}, {"holds", holds(b)}});
    }
    return to_json_text(Json{{"schema", kReportSchema},
                             {"kind", "bounds"},
                             {"x", point_json(x)},
                             {"y", point_json(y)},
                             {"s", s},
                             {"lower", std::move(lower)},
                             {"upper", std::move(upper)},
                             {"chain", "th(rho/4) <= jstar <= s <= p <= th(rho/2) <= 2th(rho/4)"},
                             {"chain_holds", chain_holds}});
  }
  if (format == Format::Csv) {
    std::string out = "name,side,value,holds\n";
    for (const BoundEntry& b : entries) {
      out += std::string(b.name) + "," + (b.side < 0 ? "lower" : "upper") + "," + real17(b.value) + "," +
             (holds(b) ? "1" : "0") + "\n";
    }
    return out + "s,value," + real17(s) + ",1\n";
  }

  // Text: one ascending column so the sandwich reads top to bottom.
  std::vector<BoundEntry> sorted = entries;
  sorted.push_back({"s", s, 0});
  std::stable_sort(sorted.begin(), sorted.end(), [](const BoundEntry& a, const BoundEntry& b) { return a.value < b.value; });
  std::ostringstream out;
  out << "bounds for s(x, y), x = " << format_point(x) << ", y = " << format_point(y) << "\n";
  char line[160];
  for (const BoundEntry& b : sorted) {
    const char* note = b.side == 0 ? "<- s" : (holds(b) ? (b.side < 0 ? "<= s" : ">= s") : "VIOLATED");
    std::snprintf(line, sizeof line, "  %-14s %.17g  %s\n", std::string(b.name).c_str(), b.value, note);
    out << line;
  }
  out << "  chain th(rho/4) <= jstar <= s <= p <= th(rho/2) <= 2th(rho/4): " << (chain_holds ? "holds" : "VIOLATED")
      << "\n";
  return out.str();
}

std::string rotate_report(Point x, Point y, RotationMode mode, Format format) {
  std::vector<std::pair<std::string, Point>> points;
  std::vector<NamedValue> reals;
  std::string_view kind;
  if (mode == RotationMode::Euclidean) {
    kind = "euclidean";
    const EuclideanRotation r = euclidean_rotation(x, y);
    const EuclideanBounds b = euclidean_bounds(x, y);
    points = {{"x0", r.x0}, {"y0", r.y0}};
    if (r.x1) points.emplace_back("x1", *r.x1);
    points.emplace_back("y1", r.y1);
    points.emplace_back("k", r.k);
    reals = {{"r", r.r}, {"s_lower", b.lower}, {"s_lower_closed", b.lower_closed}, {"s_collinear", b.collinear}};
    if (b.upper) reals.push_back({"s_upper", *b.upper});
  } else {
    kind = "hyperbolic";
    const HyperbolicRotation r = hyperbolic_rotation(x, y);
    const HyperbolicBounds b = hyperbolic_bounds(x, y);
    points = {{"x2", r.x2}, {"y2", r.y2}, {"x3", r.x3}, {"y3", r.y3}, {"q", r.q}, {"j", r.j}};
    reals = {{"t", r.t}, {"h", r.h}, {"s_lower", b.lower}, {"s_upper", b.upper}};
  }
  const double s = s_metric(UnitDisk{}, x, y).value;
  reals.push_back({"s", s});

  if (format == Format::Json) {
    Json j{{"schema", kReportSchema}, {"kind", "rotate"}, {"mode", kind}, {"x", point_json(x)}, {"y", point_json(y)}};
    for (const auto& [name, p] : points) j[name] = point_json(p);
    for (const NamedValue& v : reals) j[v.name] = v.value;
    if (mode == RotationMode::Euclidean && !j.contains("x1")) j["x1"] = nullptr;
    return to_json_text(j);
  }
  if (format == Format::Csv) {
    std::string out = "name,re,im\n";
    for (const auto& [name, p] : points) out += name + "," + real17(p.real()) + "," + real17(p.imag()) + "\n";
    for (const NamedValue& v : reals) out += v.name + "," + real17(v.value) + ",\n";
    return out;
  }
  std::ostringstream out;
  out << kind << " midpoint rotation of x = " << format_point(x) << ", y = " << format_point(y) << "\n";
  char line[160];
  for (const auto& [name, p] : points) {
    std::snprintf(line, sizeof line, "  %-16s %s\n", name.c_str(), format_point(p).c_str());
    out << line;
  }
  if (mode == RotationMode::Euclidean && points.size() == 4) out << "  x1               undefined (|k| + r >= 1)\n";
  for (const NamedValue& v : reals) {
    std::snprintf(line, sizeof line, "  %-16s %.17g\n", v.name.c_str(), v.value);
    out << line;
  }
  return out.str();
}

std::string holder_report(Point x, Point y, double K, std::optional<double> r, Format format) {
  const HolderReport h = holder_variants(x, y, K, r);
  std::vector<std::pair<std::string_view, std::optional<double>>> bounds{
      {"thm_main", h.thm_main}, {"cor_p", h.cor_p},           {"cor_collinear", h.cor_collinear},
      {"cor_hyp", h.cor_hyp},   {"cor_radial", h.cor_radial}, {"cor_unit", h.cor_unit},
  };
  if (format == Format::Json) {
    Json j{{"schema", kReportSchema}, {"kind", "holder"}, {"x", point_json(x)}, {"y", point_json(y)}, {"K", K},
           {"r", optional_json(r)}};
    Json list = Json::object();
    for (const auto& [name, v] : bounds) {
      list[std::string(name)] = v ? Json{{"value", *v}, {"vacuous", HolderReport::vacuous(*v)}} : Json(nullptr);
    }
    j["bounds"] = std::move(list);
    j["best"] = h.best;
    j["best_vacuous"] = HolderReport::vacuous(h.best);
    return to_json_text(j);
  }
  if (format == Format::Csv) {
    std::string out = "name,value,vacuous\n";
    for (const auto& [name, v] : bounds) {
      out += std::string(name) + "," + csv_real(v) + "," + (v ? (HolderReport::vacuous(*v) ? "1" : "0") : "") + "\n";
    }
    return out + "best," + real17(h.best) + "," + (HolderReport::vacuous(h.best) ? "1" : "0") + "\n";
  }
  std::ostringstream out;
  out << "bounds for |f(x) - f(y)|, K = " << real10(K) << ", x = " << format_point(x) << ", y = " << format_point(y)
      << "\n";
  char line[160];
  for (const auto& [name, v] : bounds) {
    if (v) {
      std::snprintf(line, sizeof line, "  %-14s %.17g%s\n", std::string(name).c_str(), *v,
                    HolderReport::vacuous(*v) ? "  (vacuous, exceeds 2)" : "");
    } else {
      std::snprintf(line, sizeof line, "  %-14s n/a (hypothesis not met)\n", std::string(name).c_str());
    }
    out << line;
  }
  std::snprintf(line, sizeof line, "  %-14s %.17g%s\n", "best", h.best,
                HolderReport::vacuous(h.best) ? "  (vacuous, exceeds 2)" : "");
  out << line;
  return out.str();
}

std::string_view csv_layouts() noexcept {
  return "CSV layouts (one header row, reals with 17 significant digits):\n"
         "  verify:             suite,domain,samples,seed,check,invariant,tolerance,monitored,evaluated,violations,"
         "noise,min_slack,min_index\n"
         "  probe:              probe,eps,x_re,x_im,y_re,y_im,ratio,claimed_limit,gap\n"
         "  explore-conjecture: claim,statement,evaluated,counterexamples,min_slack,min_index,x_re,x_im,y_re,y_im\n"
         "  dist:               metric,domain,x_re,x_im,y_re,y_im,value\n"
         "  bounds:             name,side,value,holds\n"
         "  rotate:             name,re,im\n"
         "  holder:             name,value,vacuous\n";
}

}  // namespace trm
