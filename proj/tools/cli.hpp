#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcmlab/lcm_engine.hpp"
#include "lcmlab/ntk.hpp"

namespace lcmlab::cli {

// A requested computation would blow the configured sieve budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LogLcmMethod { gcd_fold, sieve, theta_intervals };

/// "gcd-fold" | "sieve" | "theta-intervals"
LogLcmMethod parse_method(const std::string& name);
std::string method_name(LogLcmMethod method);

/// log of the window lcm by the requested route. gcd-fold takes the log of
/// the exact big integer; sieve sums e*log p over the factored support;
/// theta-intervals assembles per-class interval sums plus the squarefull
/// correction and log d.
double log_lcm_via(const ProgressionSpec& spec, std::int64_t n,
                   LogLcmMethod method, const SieveOptions& options);

/// Throws ResourceError when b + a*l*n exceeds max_sieve.
void require_within_budget(const ProgressionSpec& spec, std::int64_t n,
                           std::int64_t max_sieve);

struct ExperimentRow {
  std::int64_t n;
  double log_lcm;
  double ratio;     // log_lcm / n
  double constant;  // A as a double
  double abs_err;   // |ratio - constant|
};

struct ExperimentReport {
  ProgressionSpec spec;
  std::string method;
  std::string timestamp;  // ISO-8601 UTC; excluded from determinism contracts
  std::vector<ExperimentRow> rows;
};

/// Convergence experiment over a strictly ascending grid of n values.
/// Methods: sieve or theta-intervals.
ExperimentReport converge(const ProgressionSpec& spec,
                          const std::vector<std::int64_t>& n_grid,
                          LogLcmMethod method, const SieveOptions& options,
                          std::int64_t max_sieve);

/// CSV body: header n,log_lcm,ratio,constant,abs_err then one row per n,
/// 12 significant digits, '.' decimal separator, LF line endings.
std::string to_csv(const ExperimentReport& report);

/// JSON body with a meta object (spec echo, method, timestamp) and rows.
std::string to_json(const ExperimentReport& report);

/// "10^3,10^4,250000" -> {1000, 10000, 250000}
std::vector<std::int64_t> parse_n_grid(const std::string& text);

/// %.12g, the display rendering used by all CSV output.
std::string decimal12(double v);

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 validation or resource error, 2 internal
/// inconsistency (a verification check failed).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lcmlab::cli
