/* Exercises the shared library through its C header only. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "trm/trm.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: EXPECT(%s)\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int near(double a, double b, double tol) { return fabs(a - b) <= tol; }

int main(void) {
  trm_domain* disk = NULL;
  trm_domain* half = NULL;
  trm_point x, y, m;
  double v = 0.0, lower = 0.0, upper = 0.0;
  int has_upper = 0;
  trm_report* report = NULL;

  EXPECT(strlen(trm_version()) > 0);
  EXPECT(strcmp(trm_status_name(TRM_OK), "ok") == 0);

  EXPECT(trm_parse_point("0.3+0.1i", &x) == TRM_OK);
  EXPECT(x.re == 0.3 && x.im == 0.1);
  EXPECT(trm_parse_point("0.3+0.1j", &x) == TRM_ERR_PARSE);
  EXPECT(trm_last_error_offset() == 7);
  EXPECT(strlen(trm_last_error_message()) > 0);
  EXPECT(trm_parse_point(NULL, &x) == TRM_ERR_NULL_ARGUMENT);

  EXPECT(trm_domain_parse("disk", &disk) == TRM_OK);
  EXPECT(trm_domain_parse("halfplane", &half) == TRM_OK);
  {
    trm_domain* clockwise = NULL;
    EXPECT(trm_domain_parse("polygon:0;1i;1", &clockwise) == TRM_ERR_INVALID_DOMAIN);
    EXPECT(clockwise == NULL);
  }

  x.re = 0.0; x.im = 0.0;
  y.re = 0.5; y.im = 0.0;
  EXPECT(trm_metric(disk, "s", x, y, &v) == TRM_OK);
  EXPECT(near(v, 1.0 / 3.0, 1e-15));
  EXPECT(trm_metric(disk, "barrlund:0.5", x, y, &v) == TRM_ERR_INVALID_EXPONENT);
  EXPECT(trm_metric(disk, "low", x, y, &v) == TRM_ERR_ORIGIN_NOT_ALLOWED);
  EXPECT(trm_metric(disk, "nope", x, y, &v) == TRM_ERR_PARSE);

  y.re = 1.5;
  EXPECT(trm_dist_to_boundary(disk, y, &v) == TRM_ERR_POINT_NOT_IN_DOMAIN);
  y.re = 0.5;
  EXPECT(trm_dist_to_boundary(disk, y, &v) == TRM_OK && near(v, 0.5, 1e-16));

  x.re = 0.3; x.im = 0.1;
  y.re = -0.2; y.im = 0.4;
  EXPECT(trm_boundary_infimum(disk, x, y, &v, &m) == TRM_OK);
  EXPECT(near(sqrt(m.re * m.re + m.im * m.im), 1.0, 1e-12));
  EXPECT(trm_oracle_infimum(disk, x, y, 8192, &lower) == TRM_OK);
  EXPECT(near(v, lower, 1e-9 * v));

  EXPECT(trm_euclidean_bounds(x, y, &lower, &upper, &has_upper) == TRM_OK);
  EXPECT(has_upper && lower <= upper);
  EXPECT(trm_hyperbolic_bounds(x, y, &lower, &upper) == TRM_OK && lower <= upper);
  EXPECT(trm_hyperbolic_midpoint(x, y, &m) == TRM_OK);
  EXPECT(trm_holder_bound(1.0, 1.0, &v) == TRM_OK && near(v, 2.0, 1e-15));
  EXPECT(trm_holder_bound(0.5, 0.5, &v) == TRM_ERR_INVALID_DILATATION);

  EXPECT(trm_query_dist(half, "s", x, y, TRM_FORMAT_JSON, &report) == TRM_OK);
  EXPECT(report != NULL && trm_report_text(report)[0] == '{');
  trm_report_free(report);
  report = NULL;

  {
    trm_suite_config cfg;
    memset(&cfg, 0, sizeof cfg);
    cfg.suite = "chain";
    cfg.samples = 200;
    cfg.seed = 3;
    cfg.tolerance = 1e-9;
    EXPECT(trm_run_suite(&cfg, TRM_FORMAT_CSV, &report) == TRM_OK);
    EXPECT(report != NULL && !trm_report_has_violations(report));
    trm_report_free(report);
    report = NULL;
    cfg.tolerance = 0.0;
    EXPECT(trm_run_suite(&cfg, TRM_FORMAT_CSV, &report) == TRM_ERR_INVALID_CONFIG);
    cfg.tolerance = 1e-9;
    cfg.domain = "halfplane";
    EXPECT(trm_run_suite(&cfg, TRM_FORMAT_CSV, &report) == TRM_ERR_UNSUPPORTED_SUITE_FOR_DOMAIN);
    EXPECT(trm_run_suite(NULL, TRM_FORMAT_CSV, &report) == TRM_ERR_NULL_ARGUMENT);
  }

  {
    const double eps[] = {1e-3, 1e-6};
    EXPECT(trm_probe_id(0) != NULL);
    EXPECT(trm_run_probe(trm_probe_id(0), eps, 2, TRM_FORMAT_TEXT, &report) == TRM_OK);
    trm_report_free(report);
    report = NULL;
    EXPECT(trm_run_probe("missing", eps, 2, TRM_FORMAT_TEXT, &report) == TRM_ERR_UNKNOWN_PROBE);
  }

  {
    trm_conjecture_config cfg;
    memset(&cfg, 0, sizeof cfg);
    cfg.samples = 1000;
    cfg.seed = 1;
    cfg.tolerance = 1e-9;
    EXPECT(trm_explore_conjecture(&cfg, TRM_FORMAT_JSON, &report) == TRM_OK);
    EXPECT(!trm_report_has_violations(report));
    trm_report_free(report);
  }

  EXPECT(strstr(trm_csv_layouts(), "probe,eps") != NULL);
  trm_report_free(NULL);
  trm_domain_free(disk);
  trm_domain_free(half);

  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return 1;
  }
  puts("capi: all expectations passed");
  return 0;
}
