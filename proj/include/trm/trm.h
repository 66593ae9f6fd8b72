#ifndef TRM_TRM_H
#define TRM_TRM_H

#include <stddef.h>
#include <stdint.h>

#if defined(TRM_BUILDING_LIBRARY)
#define TRM_API __attribute__((visibility("default")))
#else
#define TRM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trm_status {
  TRM_OK = 0,
  TRM_ERR_POINT_NOT_IN_DOMAIN,
  TRM_ERR_DEGENERATE_INPUT,
  TRM_ERR_POINT_NOT_ON_CIRCLE,
  TRM_ERR_INVALID_DOMAIN,
  TRM_ERR_INVALID_EXPONENT,
  TRM_ERR_ORIGIN_NOT_ALLOWED,
  TRM_ERR_PRECONDITION_FAILED,
  TRM_ERR_UNSUPPORTED_DOMAIN,
  TRM_ERR_BALL_NOT_CONTAINED,
  TRM_ERR_COLLINEAR_WITH_ORIGIN,
  TRM_ERR_INVALID_DILATATION,
  TRM_ERR_INVALID_METRIC_VALUE,
  TRM_ERR_NONPOSITIVE_RADIUS,
  TRM_ERR_UNSUPPORTED_SUITE_FOR_DOMAIN,
  TRM_ERR_UNKNOWN_PROBE,
  TRM_ERR_INVALID_CONFIG,
  TRM_ERR_PARSE,
  /* A required pointer argument was NULL. */
  TRM_ERR_NULL_ARGUMENT,
  TRM_ERR_INTERNAL
} trm_status;

typedef enum trm_format { TRM_FORMAT_TEXT = 0, TRM_FORMAT_JSON, TRM_FORMAT_CSV } trm_format;

typedef struct trm_point {
  double re;
  double im;
} trm_point;

typedef struct trm_domain trm_domain;

/* Rendered output of a query, suite run, probe or conjecture scan. */
typedef struct trm_report trm_report;

typedef struct trm_suite_config {
  /* chain, barrlund, low, rotation-euclidean, rotation-hyperbolic, holder or all. */
  const char* suite;
  uint64_t samples;
  uint64_t seed;
  /* Violation threshold on the slack, > 0; the CLI default is 1e-9. */
  double tolerance;
  /* Domain literal; NULL selects the suite's default domain. */
  const char* domain;
  /* Nonzero evaluates only sample `index`. */
  int has_index;
  uint64_t index;
  /* 0 uses every hardware thread; results do not depend on it. */
  unsigned threads;
} trm_suite_config;

typedef struct trm_conjecture_config {
  uint64_t samples;
  uint64_t seed;
  /* Counterexample threshold on the slack, > 0. */
  double tolerance;
  int has_index;
  uint64_t index;
  unsigned threads;
} trm_conjecture_config;

TRM_API const char* trm_version(void);
TRM_API const char* trm_status_name(trm_status status);

/* Details of the last failure on the calling thread. The offset is the byte
   position of a parse error in the offending literal, or -1. */
TRM_API const char* trm_last_error_message(void);
TRM_API long trm_last_error_offset(void);

TRM_API trm_status trm_parse_point(const char* text, trm_point* out);

TRM_API trm_status trm_domain_parse(const char* text, trm_domain** out);
TRM_API void trm_domain_free(trm_domain* domain);

TRM_API trm_status trm_dist_to_boundary(const trm_domain* domain, trm_point x, double* out);
TRM_API trm_status trm_boundary_infimum(const trm_domain* domain, trm_point x, trm_point y, double* value,
                                        trm_point* minimizer);
TRM_API trm_status trm_oracle_infimum(const trm_domain* domain, trm_point x, trm_point y, size_t resolution,
                                      double* out);

/* metric: s, jstar, p, barrlund:<p>, low or rho. */
TRM_API trm_status trm_metric(const trm_domain* domain, const char* metric, trm_point x, trm_point y, double* out);

/* Unit disk. upper is written only when *has_upper is set. */
TRM_API trm_status trm_euclidean_bounds(trm_point x, trm_point y, double* lower, double* upper, int* has_upper);
TRM_API trm_status trm_hyperbolic_bounds(trm_point x, trm_point y, double* lower, double* upper);
TRM_API trm_status trm_hyperbolic_midpoint(trm_point x, trm_point y, trm_point* out);
TRM_API trm_status trm_holder_bound(double s_value, double K, double* out);

TRM_API trm_status trm_query_dist(const trm_domain* domain, const char* metric, trm_point x, trm_point y,
                                  trm_format format, trm_report** out);
TRM_API trm_status trm_query_bounds(trm_point x, trm_point y, trm_format format, trm_report** out);
/* mode: euclidean or hyperbolic. */
TRM_API trm_status trm_query_rotate(trm_point x, trm_point y, const char* mode, trm_format format, trm_report** out);
/* r may be NULL. */
TRM_API trm_status trm_query_holder(trm_point x, trm_point y, double K, const double* r, trm_format format,
                                    trm_report** out);

TRM_API trm_status trm_run_suite(const trm_suite_config* config, trm_format format, trm_report** out);
TRM_API trm_status trm_run_probe(const char* probe_id, const double* eps, size_t count, trm_format format,
                                 trm_report** out);
TRM_API trm_status trm_explore_conjecture(const trm_conjecture_config* config, trm_format format, trm_report** out);

/* Owned by the report; valid until trm_report_free. */
TRM_API const char* trm_report_text(const trm_report* report);
/* Nonzero when a suite violation or a conjecture counterexample was found. */
TRM_API int trm_report_has_violations(const trm_report* report);
TRM_API void trm_report_free(trm_report* report);

/* Catalog of probe ids; NULL past the end. */
TRM_API const char* trm_probe_id(size_t i);
TRM_API const char* trm_csv_layouts(void);

#ifdef __cplusplus
}
#endif

#endif
