// Command-line front end. Links only the C API in trm/trm.h.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trm/trm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Failure already reported on stderr; carries the exit code.
struct Exit {
  int code;
};

int exit_code(trm_status status) {
  switch (status) {
    case TRM_ERR_PARSE:
    case TRM_ERR_INVALID_CONFIG:
    case TRM_ERR_UNKNOWN_PROBE:
    case TRM_ERR_NULL_ARGUMENT: return kExitUsage;
    default: return kExitDomain;
  }
}

[[noreturn]] void fail(trm_status status, const std::string& context = {}) {
  std::fprintf(stderr, "trm: error: %s%s [%s]\n", context.c_str(), trm_last_error_message(), trm_status_name(status));
  throw Exit{exit_code(status)};
}

void check(trm_status status) {
  if (status != TRM_OK) fail(status);
}

// Prints the literal with a caret under the offending character.
[[noreturn]] void fail_literal(trm_status status, const std::string& option, const std::string& text) {
  const long offset = trm_last_error_offset();
  std::fprintf(stderr, "trm: error: %s: %s\n", option.c_str(), trm_last_error_message());
  if (offset >= 0) {
    std::fprintf(stderr, "  %s\n  %s^\n", text.c_str(), std::string(static_cast<std::size_t>(offset), ' ').c_str());
  }
  throw Exit{exit_code(status)};
}

trm_point point_arg(const std::string& option, const std::string& text) {
  trm_point p{};
  const trm_status status = trm_parse_point(text.c_str(), &p);
  if (status != TRM_OK) fail_literal(status, option, text);
  return p;
}

struct DomainHandle {
  trm_domain* ptr = nullptr;
  explicit DomainHandle(const std::string& text) {
    const trm_status status = trm_domain_parse(text.c_str(), &ptr);
    if (status != TRM_OK) fail_literal(status, "--domain", text);
  }
  ~DomainHandle() { trm_domain_free(ptr); }
  DomainHandle(const DomainHandle&) = delete;
  DomainHandle& operator=(const DomainHandle&) = delete;
};

trm_format format_arg(const std::string& text) {
  if (text == "json") return TRM_FORMAT_JSON;
  if (text == "csv") return TRM_FORMAT_CSV;
  return TRM_FORMAT_TEXT;
}

// Prints the report filled in by a call that returned `status` and frees
// it; returns 1 when it records violations.
int emit(trm_status status, trm_report** out) {
  check(status);
  trm_report* report = *out;
  std::fputs(trm_report_text(report), stdout);
  const int violations = trm_report_has_violations(report);
  trm_report_free(report);
  return violations ? kExitViolation : kExitOk;
}

std::vector<double> parse_eps(const std::string& list) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string item = list.substr(pos, comma - pos);
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size()) {
      std::fprintf(stderr, "trm: error: --eps: '%s' is not a number\n  %s\n  %s^\n", item.c_str(), list.c_str(),
                   std::string(pos + static_cast<std::size_t>(end - item.c_str()), ' ').c_str());
      throw Exit{kExitUsage};
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string probe_list() {
  std::string out;
  for (std::size_t i = 0; trm_probe_id(i) != nullptr; ++i) out += (i ? ", " : "") + std::string(trm_probe_id(i));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular ratio metric toolkit: metrics, bounds, rotations, Holder estimates and verification suites"};
  app.require_subcommand(1);
  app.footer(std::string("Exit codes: 0 ok, 1 violation or counterexample found, 2 usage or parse error, "
                         "3 domain or precondition error.\n\n") +
             trm_csv_layouts());
  app.set_version_flag("--version", trm_version());

  const std::vector<std::string> formats{"text", "json", "csv"};
  std::string x_text, y_text, domain_text = "disk", metric_text = "s", format_text = "text";

  auto* dist = app.add_subcommand("dist", "Evaluate one metric for a pair of points");
  bool dist_json = false;
  dist->add_option("--domain", domain_text, "disk, halfplane, punctured, complement:<z0> or polygon:<v1;v2;...>")
      ->capture_default_str();
  dist->add_option("--x", x_text, "First point, e.g. 0.3+0.1i")->required();
  dist->add_option("--y", y_text, "Second point")->required();
  dist->add_option("--metric", metric_text, "s, jstar, p, barrlund:<p>, low or rho")->capture_default_str();
  dist->add_flag("--json", dist_json, "Same as --format json");
  dist->add_option("--format", format_text)->check(CLI::IsMember(formats))->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Every estimate of s in the unit disk, in sandwich order");
  bounds->add_option("--x", x_text)->required();
  bounds->add_option("--y", y_text)->required();
  bounds->add_option("--format", format_text)->check(CLI::IsMember(formats))->capture_default_str();

  auto* rotate = app.add_subcommand("rotate", "Midpoint rotations of a pair in the unit disk");
  std::string mode = "hyperbolic";
  rotate->add_option("--x", x_text)->required();
  rotate->add_option("--y", y_text)->required();
  rotate->add_option("--mode", mode)->check(CLI::IsMember({"euclidean", "hyperbolic"}))->capture_default_str();
  rotate->add_option("--format", format_text)->check(CLI::IsMember(formats))->capture_default_str();

  auto* holder = app.add_subcommand("holder", "Distortion bounds for K-quasiconformal self-maps of the disk");
  double K = 1.0;
  std::optional<double> radius;
  holder->add_option("--x", x_text)->required();
  holder->add_option("--y", y_text)->required();
  holder->add_option("--K", K, "Maximal dilatation, >= 1")->required();
  holder->add_option("--r", radius, "Radius r with |x+y|/2 <= r < 1 for the radial estimate");
  holder->add_option("--format", format_text)->check(CLI::IsMember(formats))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run randomized verification suites");
  std::string suite;
  std::uint64_t samples = 0, seed = 0;
  double tol = 1e-9;
  std::optional<std::string> verify_domain;
  std::optional<std::uint64_t> index;
  unsigned threads = 0;
  verify
      ->add_option("--suite", suite, "chain, barrlund, low, rotation-euclidean, rotation-hyperbolic, holder or all")
      ->required();
  verify->add_option("--samples", samples)->required();
  verify->add_option("--seed", seed)->required();
  verify->add_option("--tol", tol, "Violation threshold on the slack")->capture_default_str();
  verify->add_option("--domain", verify_domain, "Domain for a single suite (default disk; punctured for low)");
  verify->add_option("--index", index, "Evaluate only this sample index");
  verify->add_option("--threads", threads, "Worker threads, 0 = all cores; results do not depend on it");
  verify->add_option("--format", format_text)->check(CLI::IsMember(formats))->capture_default_str();

  auto* probe = app.add_subcommand("probe", "Tabulate a sharpness witness family against its limit");
  std::string probe_id, eps_text;
  probe->add_option("--id", probe_id, probe_list())->required();
  probe->add_option("--eps", eps_text, "Comma-separated values in (0, 1/2)")->required();
  probe->add_option("--format", format_text)->check(CLI::IsMember(formats))->capture_default_str();

  auto* explore = app.add_subcommand("explore-conjecture", "Search for counterexamples to the rotation comparisons");
  explore->add_option("--samples", samples)->required();
  explore->add_option("--seed", seed)->required();
  explore->add_option("--tol", tol, "Counterexample threshold on the slack")->capture_default_str();
  explore->add_option("--index", index, "Evaluate only this sample index");
  explore->add_option("--threads", threads, "Worker threads, 0 = all cores");
  explore->add_option("--format", format_text)->check(CLI::IsMember(formats))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    trm_format format = format_arg(format_text);
    trm_report* report = nullptr;
    if (dist->parsed()) {
      if (dist_json) format = TRM_FORMAT_JSON;
      const DomainHandle domain(domain_text);
      const trm_point x = point_arg("--x", x_text);
      const trm_point y = point_arg("--y", y_text);
      return emit(trm_query_dist(domain.ptr, metric_text.c_str(), x, y, format, &report), &report);
    }
    if (bounds->parsed()) {
      const trm_point x = point_arg("--x", x_text);
      const trm_point y = point_arg("--y", y_text);
      return emit(trm_query_bounds(x, y, format, &report), &report);
    }
    if (rotate->parsed()) {
      const trm_point x = point_arg("--x", x_text);
      const trm_point y = point_arg("--y", y_text);
      return emit(trm_query_rotate(x, y, mode.c_str(), format, &report), &report);
    }
    if (holder->parsed()) {
      const trm_point x = point_arg("--x", x_text);
      const trm_point y = point_arg("--y", y_text);
      return emit(trm_query_holder(x, y, K, radius ? &*radius : nullptr, format, &report), &report);
    }
    if (verify->parsed()) {
      trm_suite_config config{};
      config.suite = suite.c_str();
      config.samples = samples;
      config.seed = seed;
      config.tolerance = tol;
      config.domain = verify_domain ? verify_domain->c_str() : nullptr;
      config.has_index = index.has_value();
      config.index = index.value_or(0);
      config.threads = threads;
      const trm_status status = trm_run_suite(&config, format, &report);
      if (status == TRM_ERR_PARSE && verify_domain) fail_literal(status, "--domain", *verify_domain);
      return emit(status, &report);
    }
    if (probe->parsed()) {
      const std::vector<double> eps = parse_eps(eps_text);
      return emit(trm_run_probe(probe_id.c_str(), eps.data(), eps.size(), format, &report), &report);
    }
    trm_conjecture_config config{};
    config.samples = samples;
    config.seed = seed;
    config.tolerance = tol;
    config.has_index = index.has_value();
    config.index = index.value_or(0);
    config.threads = threads;
    return emit(trm_explore_conjecture(&config, format, &report), &report);
  } catch (const Exit& e) {
    return e.code;
  }
}
