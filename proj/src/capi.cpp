#include "trm/trm.h"

#include <exception>
#include <string>
#include <vector>

#include "trm/boundary.hpp"
#include "trm/conjecture.hpp"
#include "trm/error.hpp"
#include "trm/holder.hpp"
#include "trm/hyperbolic.hpp"
#include "trm/parse.hpp"
#include "trm/probes.hpp"
#include "trm/report.hpp"
#include "trm/rotations.hpp"
#include "trm/suites.hpp"

struct trm_domain {
  trm::Domain domain;
};

struct trm_report {
  std::string text;
  bool violations = false;
};

namespace {

thread_local std::string last_message;
thread_local long last_offset = -1;

trm_status status_of(trm::ErrorCode code) {
  using trm::ErrorCode;
  switch (code) {
    case ErrorCode::PointNotInDomain: return TRM_ERR_POINT_NOT_IN_DOMAIN;
    case ErrorCode::DegenerateInput: return TRM_ERR_DEGENERATE_INPUT;
    case ErrorCode::PointNotOnCircle: return TRM_ERR_POINT_NOT_ON_CIRCLE;
    case ErrorCode::InvalidDomain: return TRM_ERR_INVALID_DOMAIN;
    case ErrorCode::InvalidExponent: return TRM_ERR_INVALID_EXPONENT;
    case ErrorCode::OriginNotAllowed: return TRM_ERR_ORIGIN_NOT_ALLOWED;
    case ErrorCode::PreconditionFailed: return TRM_ERR_PRECONDITION_FAILED;
    case ErrorCode::UnsupportedDomain: return TRM_ERR_UNSUPPORTED_DOMAIN;
    case ErrorCode::BallNotContained: return TRM_ERR_BALL_NOT_CONTAINED;
    case ErrorCode::CollinearWithOrigin: return TRM_ERR_COLLINEAR_WITH_ORIGIN;
    case ErrorCode::InvalidDilatation: return TRM_ERR_INVALID_DILATATION;
    case ErrorCode::InvalidMetricValue: return TRM_ERR_INVALID_METRIC_VALUE;
    case ErrorCode::NonpositiveRadius: return TRM_ERR_NONPOSITIVE_RADIUS;
    case ErrorCode::UnsupportedSuiteForDomain: return TRM_ERR_UNSUPPORTED_SUITE_FOR_DOMAIN;
    case ErrorCode::UnknownProbe: return TRM_ERR_UNKNOWN_PROBE;
    case ErrorCode::InvalidConfig: return TRM_ERR_INVALID_CONFIG;
    case ErrorCode::ParseError: return TRM_ERR_PARSE;
  }
  return TRM_ERR_INTERNAL;
}

trm_status fail(trm_status status, std::string message, long offset = -1) {
  last_message = std::move(message);
  last_offset = offset;
  return status;
}

// Runs body, translating exceptions into a status and the thread's last error.
template <class Body>
trm_status guarded(Body&& body) {
  try {
    body();
    last_message.clear();
    last_offset = -1;
    return TRM_OK;
  } catch (const trm::ParseError& e) {
    return fail(TRM_ERR_PARSE, e.what(), static_cast<long>(e.offset()));
  } catch (const trm::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(TRM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TRM_ERR_INTERNAL, "unknown failure");
  }
}

trm::Point to_point(trm_point p) { return {p.re, p.im}; }
trm_point from_point(trm::Point p) { return {p.real(), p.imag()}; }

trm::Format to_format(trm_format format) {
  switch (format) {
    case TRM_FORMAT_TEXT: return trm::Format::Text;
    case TRM_FORMAT_JSON: return trm::Format::Json;
    case TRM_FORMAT_CSV: return trm::Format::Csv;
  }
  throw trm::Error(trm::ErrorCode::InvalidConfig, "unknown output format");
}

#define TRM_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(TRM_ERR_NULL_ARGUMENT, #ptr " must not be NULL")

void emit(trm_report** out, std::string text, bool violations = false) {
  *out = new trm_report{std::move(text), violations};
}

}  // namespace

extern "C" {

const char* trm_version(void) { return "1.0.0"; }

const char* trm_status_name(trm_status status) {
  switch (status) {
    case TRM_OK: return "ok";
    case TRM_ERR_NULL_ARGUMENT: return "NullArgument";
    case TRM_ERR_INTERNAL: return "Internal";
    default: break;
  }
  for (int c = 0; c <= static_cast<int>(trm::ErrorCode::ParseError); ++c) {
    const auto code = static_cast<trm::ErrorCode>(c);
    if (status_of(code) == status) return trm::to_string(code).data();
  }
  return "Unknown";
}

const char* trm_last_error_message(void) { return last_message.c_str(); }
long trm_last_error_offset(void) { return last_offset; }

trm_status trm_parse_point(const char* text, trm_point* out) {
  TRM_REQUIRE(text);
  TRM_REQUIRE(out);
  return guarded([&] { *out = from_point(trm::parse_point(text)); });
}

trm_status trm_domain_parse(const char* text, trm_domain** out) {
  TRM_REQUIRE(text);
  TRM_REQUIRE(out);
  return guarded([&] { *out = new trm_domain{trm::parse_domain(text)}; });
}

void trm_domain_free(trm_domain* domain) { delete domain; }

trm_status trm_dist_to_boundary(const trm_domain* domain, trm_point x, double* out) {
  TRM_REQUIRE(domain);
  TRM_REQUIRE(out);
  return guarded([&] { *out = trm::dist_to_boundary(domain->domain, to_point(x)); });
}

trm_status trm_boundary_infimum(const trm_domain* domain, trm_point x, trm_point y, double* value,
                                trm_point* minimizer) {
  TRM_REQUIRE(domain);
  TRM_REQUIRE(value);
  return guarded([&] {
    const trm::InfimumResult r = trm::boundary_infimum(domain->domain, to_point(x), to_point(y));
    *value = r.value;
    if (minimizer) *minimizer = from_point(r.minimizer);
  });
}

trm_status trm_oracle_infimum(const trm_domain* domain, trm_point x, trm_point y, size_t resolution, double* out) {
  TRM_REQUIRE(domain);
  TRM_REQUIRE(out);
  return guarded([&] { *out = trm::oracle_boundary_infimum(domain->domain, to_point(x), to_point(y), resolution); });
}

trm_status trm_metric(const trm_domain* domain, const char* metric, trm_point x, trm_point y, double* out) {
  TRM_REQUIRE(domain);
  TRM_REQUIRE(metric);
  TRM_REQUIRE(out);
  return guarded([&] {
    const trm::MetricSpec spec = trm::parse_metric(metric);
    const trm::Point a = to_point(x);
    const trm::Point b = to_point(y);
    switch (spec.metric) {
      case trm::Metric::S: *out = trm::s_metric(domain->domain, a, b).value; break;
      case trm::Metric::JStar: *out = trm::jstar(domain->domain, a, b).value; break;
      case trm::Metric::PointPair: *out = trm::point_pair(domain->domain, a, b).value; break;
      case trm::Metric::Barrlund: *out = trm::barrlund(domain->domain, spec.exponent, a, b).value; break;
      case trm::Metric::Low:
        if (!std::holds_alternative<trm::PuncturedUnitDisk>(domain->domain) &&
            !std::holds_alternative<trm::UnitDisk>(domain->domain)) {
          throw trm::Error(trm::ErrorCode::UnsupportedDomain, "low is defined on the punctured unit disk only");
        }
        *out = trm::low(a, b).value;
        break;
      case trm::Metric::Rho: *out = trm::rho(domain->domain, a, b).value; break;
    }
  });
}

trm_status trm_euclidean_bounds(trm_point x, trm_point y, double* lower, double* upper, int* has_upper) {
  TRM_REQUIRE(lower);
  TRM_REQUIRE(upper);
  TRM_REQUIRE(has_upper);
  return guarded([&] {
    const trm::EuclideanBounds b = trm::euclidean_bounds(to_point(x), to_point(y));
    *lower = b.lower;
    *has_upper = b.upper.has_value();
    if (b.upper) *upper = *b.upper;
  });
}

trm_status trm_hyperbolic_bounds(trm_point x, trm_point y, double* lower, double* upper) {
  TRM_REQUIRE(lower);
  TRM_REQUIRE(upper);
  return guarded([&] {
    const trm::HyperbolicBounds b = trm::hyperbolic_bounds(to_point(x), to_point(y));
    *lower = b.lower;
    *upper = b.upper;
  });
}

trm_status trm_hyperbolic_midpoint(trm_point x, trm_point y, trm_point* out) {
  TRM_REQUIRE(out);
  return guarded([&] { *out = from_point(trm::hyperbolic_midpoint(to_point(x), to_point(y))); });
}

trm_status trm_holder_bound(double s_value, double K, double* out) {
  TRM_REQUIRE(out);
  return guarded([&] { *out = trm::holder_bound(s_value, K); });
}

trm_status trm_query_dist(const trm_domain* domain, const char* metric, trm_point x, trm_point y, trm_format format,
                          trm_report** out) {
  TRM_REQUIRE(domain);
  TRM_REQUIRE(metric);
  TRM_REQUIRE(out);
  return guarded([&] {
    emit(out, trm::dist_report(domain->domain, trm::parse_metric(metric), to_point(x), to_point(y),
                               to_format(format)));
  });
}

trm_status trm_query_bounds(trm_point x, trm_point y, trm_format format, trm_report** out) {
  TRM_REQUIRE(out);
  return guarded([&] { emit(out, trm::bounds_report(to_point(x), to_point(y), to_format(format))); });
}

trm_status trm_query_rotate(trm_point x, trm_point y, const char* mode, trm_format format, trm_report** out) {
  TRM_REQUIRE(mode);
  TRM_REQUIRE(out);
  return guarded([&] {
    emit(out, trm::rotate_report(to_point(x), to_point(y), trm::parse_rotation_mode(mode), to_format(format)));
  });
}

trm_status trm_query_holder(trm_point x, trm_point y, double K, const double* r, trm_format format,
                            trm_report** out) {
  TRM_REQUIRE(out);
  return guarded([&] {
    const std::optional<double> radius = r ? std::optional<double>(*r) : std::nullopt;
    emit(out, trm::holder_report(to_point(x), to_point(y), K, radius, to_format(format)));
  });
}

trm_status trm_run_suite(const trm_suite_config* config, trm_format format, trm_report** out) {
  TRM_REQUIRE(config);
  TRM_REQUIRE(config->suite);
  TRM_REQUIRE(out);
  return guarded([&] {
    trm::SuiteConfig c;
    const std::string_view name = config->suite;
    if (name != "all") c.suite = trm::parse_suite(name);
    c.samples = config->samples;
    c.seed = config->seed;
    c.tolerance = config->tolerance;
    if (config->domain) c.domain = trm::parse_domain(config->domain);
    if (config->has_index) c.only_index = config->index;
    c.threads = config->threads;
    const std::vector<trm::SuiteReport> reports = trm::run_suites(c);
    bool violations = false;
    for (const trm::SuiteReport& r : reports) violations = violations || !r.all_pass();
    emit(out, trm::render(reports, to_format(format)), violations);
  });
}

trm_status trm_run_probe(const char* probe_id, const double* eps, size_t count, trm_format format, trm_report** out) {
  TRM_REQUIRE(probe_id);
  TRM_REQUIRE(out);
  if (count > 0) TRM_REQUIRE(eps);
  return guarded([&] {
    const std::vector<double> values(eps, eps + count);
    emit(out, trm::render(trm::sharpness_probe(probe_id, values), to_format(format)));
  });
}

trm_status trm_explore_conjecture(const trm_conjecture_config* config, trm_format format, trm_report** out) {
  TRM_REQUIRE(config);
  TRM_REQUIRE(out);
  return guarded([&] {
    trm::ConjectureConfig c;
    c.samples = config->samples;
    c.seed = config->seed;
    c.tolerance = config->tolerance;
    if (config->has_index) c.only_index = config->index;
    c.threads = config->threads;
    const trm::ConjectureReport report = trm::conjecture_scan(c);
    emit(out, trm::render(report, to_format(format)), report.found_counterexample());
  });
}

const char* trm_report_text(const trm_report* report) { return report ? report->text.c_str() : ""; }

int trm_report_has_violations(const trm_report* report) { return report && report->violations ? 1 : 0; }

void trm_report_free(trm_report* report) { delete report; }

const char* trm_probe_id(size_t i) {
  const auto catalog = trm::probe_catalog();
  return i < catalog.size() ? catalog[i].id.data() : nullptr;
}

const char* trm_csv_layouts(void) { return trm::csv_layouts().data(); }

}  // extern "C"
