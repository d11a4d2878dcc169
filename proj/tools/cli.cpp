#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "checks.hpp"
#include "json.hpp"
#include "lcmlab/constants.hpp"
#include "lcmlab/residue_decomp.hpp"
#include "lcmlab/summation.hpp"

namespace lcmlab::cli {

using ordered_json = nlohmann::ordered_json;

std::string decimal12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

LogLcmMethod parse_method(const std::string& name) {
  if (name == "gcd-fold") return LogLcmMethod::gcd_fold;
  if (name == "sieve") return LogLcmMethod::sieve;
  if (name == "theta-intervals") return LogLcmMethod::theta_intervals;
  throw std::invalid_argument(
      "unknown method '" + name +
      "' (expected gcd-fold, sieve or theta-intervals)");
}

std::string method_name(LogLcmMethod method) {
  switch (method) {
    case LogLcmMethod::gcd_fold:
      return "gcd-fold";
    case LogLcmMethod::sieve:
      return "sieve";
    case LogLcmMethod::theta_intervals:
      return "theta-intervals";
  }
  return {};
}

namespace {

double log_big(const BigInt& z) {
  signed long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

std::string iso_utc_now() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::int64_t parse_int_strict(std::string_view text, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " '" +
                                std::string(text) + "'");
  }
  return v;
}

ordered_json spec_json(const ProgressionSpec& spec) {
  return ordered_json{{"a", spec.a},   {"b", spec.b},   {"l", spec.l},
                      {"m", spec.m},   {"d", spec.d},   {"a1", spec.a1},
                      {"b1", spec.b1}, {"b0", spec.b0}, {"q", spec.q}};
}

}  // namespace

std::vector<std::int64_t> parse_n_grid(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) {
      throw std::invalid_argument("empty entry in --n-grid");
    }
    const auto caret = token.find('^');
    if (caret == std::string::npos) {
      out.push_back(parse_int_strict(token, "--n-grid entry"));
    } else {
      const std::int64_t base =
          parse_int_strict(token.substr(0, caret), "--n-grid base");
      const std::int64_t exp =
          parse_int_strict(token.substr(caret + 1), "--n-grid exponent");
      if (exp < 0) throw std::invalid_argument("--n-grid exponent must be >= 0");
      std::int64_t v = 1;
      for (std::int64_t e = 0; e < exp; ++e) v = checked_mul(v, base);
      out.push_back(v);
    }
  }
  if (out.empty()) throw std::invalid_argument("--n-grid is empty");
  return out;
}

void require_within_budget(const ProgressionSpec& spec, std::int64_t n,
                           std::int64_t max_sieve) {
  const WindowInstance w = make_window(spec, n);
  if (w.term_hi > max_sieve) {
    std::ostringstream msg;
    msg << "window bound b + a*l*n = " << w.term_hi << " at n = " << n
        << " exceeds the sieve budget " << max_sieve
        << " (raise --max-sieve)";
    throw ResourceError(msg.str());
  }
}

double log_lcm_via(const ProgressionSpec& spec, std::int64_t n,
                   LogLcmMethod method, const SieveOptions& options) {
  switch (method) {
    case LogLcmMethod::gcd_fold:
      return log_big(lcm_fold(window_terms(spec, n)));
    case LogLcmMethod::sieve:
      return log_lcm(factor_window_sieve(spec, n, options));
    case LogLcmMethod::theta_intervals: {
      CompensatedSum sum;
      for (std::int64_t r : residue_set(spec.a1)) {
        sum.add(residue_log_sum(spec, n, r,
                                SupportSumMethod::theta_intervals));
      }
      sum.add(squarefull_correction(spec, n));
      sum.add(std::log(static_cast<double>(spec.d)));
      return sum.value();
    }
  }
  throw std::logic_error("unreachable method");
}

ExperimentReport converge(const ProgressionSpec& spec,
                          const std::vector<std::int64_t>& n_grid,
                          LogLcmMethod method, const SieveOptions& options,
                          std::int64_t max_sieve) {
  if (method == LogLcmMethod::gcd_fold) {
    throw std::invalid_argument(
        "converge supports the sieve and theta-intervals methods");
  }
  if (n_grid.empty()) {
    throw std::invalid_argument("converge requires a nonempty n grid");
  }
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1) {
      throw std::invalid_argument("n grid entries must be >= 1");
    }
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) {
      throw std::invalid_argument("n grid must be strictly ascending");
    }
    require_within_budget(spec, n_grid[i], max_sieve);
  }

  const double constant = asymptotic_constant(spec).value.get_d();
  ExperimentReport report;
  report.spec = spec;
  report.method = method_name(method);
  report.timestamp = iso_utc_now();
  for (std::int64_t n : n_grid) {
    ExperimentRow row;
    row.n = n;
    row.log_lcm = log_lcm_via(spec, n, method, options);
    row.ratio = row.log_lcm / static_cast<double>(n);
    row.constant = constant;
    row.abs_err = std::abs(row.ratio - constant);
    report.rows.push_back(row);
  }
  return report;
}

std::string to_csv(const ExperimentReport& report) {
  std::string out = "n,log_lcm,ratio,constant,abs_err\n";
  for (const ExperimentRow& row : report.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += decimal12(row.log_lcm);
    out += ',';
    out += decimal12(row.ratio);
    out += ',';
    out += decimal12(row.constant);
    out += ',';
    out += decimal12(row.abs_err);
    out += '\n';
  }
  return out;
}

std::string to_json(const ExperimentReport& report) {
  ordered_json j;
  j["meta"] = ordered_json{{"spec", spec_json(report.spec)},
                           {"method", report.method},
                           {"timestamp", report.timestamp}};
  ordered_json rows = ordered_json::array();
  for (const ExperimentRow& row : report.rows) {
    rows.push_back(ordered_json{{"n", row.n},
                                {"log_lcm", row.log_lcm},
                                {"ratio", row.ratio},
                                {"constant", row.constant},
                                {"abs_err", row.abs_err}});
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

namespace {

struct Options {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t l = 1;
  std::int64_t m = 0;
  std::int64_t n = 1;
  std::string n_grid;
  std::string method;
  std::string format = "json";
  std::string output;
  int threads = 1;
  std::int64_t max_sieve = 100'000'000;
  double x = 0.0;
  std::int64_t h = 1;
  std::int64_t k = 1;
  bool grid_small = false;
};

std::string run_constant(const Options& opt) {
  const ProgressionSpec spec = normalize(opt.a, opt.b, opt.l, opt.m);
  const AsymptoticConstant constant = asymptotic_constant(spec);
  if (opt.format == "csv") {
    std::string body = "r,K,A_r\n";
    for (const auto& [r, entry] : constant.breakdown) {
      body += std::to_string(r) + ',' + std::to_string(entry.rung_cap) + ',' +
              rational_str(entry.constant) + '\n';
    }
    return body;
  }
  ordered_json j;
  j["spec"] = spec_json(spec);
  j["A"] = rational_str(constant.value);
  j["A_float"] = constant.value.get_d();
  j["phi"] = constant.phi;
  ordered_json breakdown = ordered_json::object();
  for (const auto& [r, entry] : constant.breakdown) {
    breakdown[std::to_string(r)] =
        ordered_json{{"K", entry.rung_cap},
                     {"A_r", rational_str(entry.constant)},
                     {"A_r_float", entry.constant.get_d()}};
  }
  j["breakdown"] = breakdown;
  return j.dump(2) + "\n";
}

std::string run_lcm(const Options& opt) {
  const ProgressionSpec spec = normalize(opt.a, opt.b, opt.l, opt.m);
  const LogLcmMethod method =
      opt.method.empty() ? LogLcmMethod::sieve : parse_method(opt.method);
  if (method == LogLcmMethod::theta_intervals) {
    throw std::invalid_argument(
        "lcm needs an exact method: gcd-fold or sieve");
  }
  require_within_budget(spec, opt.n, opt.max_sieve);
  const SieveOptions sieve_options{.threads = opt.threads};
  const BigInt value =
      method == LogLcmMethod::gcd_fold
          ? lcm_fold(window_terms(spec, opt.n))
          : reconstruct(factor_window_sieve(spec, opt.n, sieve_options));
  const double logv = log_big(value);
  if (opt.format == "csv") {
    return "lcm,log_lcm\n" + value.get_str() + ',' + decimal12(logv) + '\n';
  }
  ordered_json j;
  j["spec"] = spec_json(spec);
  j["n"] = opt.n;
  j["method"] = method_name(method);
  j["lcm"] = value.get_str();
  j["log_lcm"] = logv;
  return j.dump(2) + "\n";
}

std::string run_logl(const Options& opt) {
  const ProgressionSpec spec = normalize(opt.a, opt.b, opt.l, opt.m);
  const LogLcmMethod method =
      opt.method.empty() ? LogLcmMethod::sieve : parse_method(opt.method);
  require_within_budget(spec, opt.n, opt.max_sieve);
  const SieveOptions sieve_options{.threads = opt.threads};
  const double logv = log_lcm_via(spec, opt.n, method, sieve_options);
  const double constant = asymptotic_constant(spec).value.get_d();
  const double ratio = logv / static_cast<double>(opt.n);
  if (opt.format == "csv") {
    return "n,log_lcm,ratio,constant,abs_err\n" + std::to_string(opt.n) +
           ',' + decimal12(logv) + ',' + decimal12(ratio) + ',' +
           decimal12(constant) + ',' + decimal12(std::abs(ratio - constant)) +
           '\n';
  }
  ordered_json j;
  j["spec"] = spec_json(spec);
  j["n"] = opt.n;
  j["method"] = method_name(method);
  j["log_lcm"] = logv;
  j["ratio"] = ratio;
  j["constant"] = constant;
  j["abs_err"] = std::abs(ratio - constant);
  return j.dump(2) + "\n";
}

std::string run_primes(const Options& opt) {
  const ProgressionSpec spec = normalize(opt.a, opt.b, opt.l, opt.m);
  if (!opt.method.empty() && opt.method != "sieve") {
    throw std::invalid_argument("primes supports only the sieve method");
  }
  require_within_budget(spec, opt.n, opt.max_sieve);
  const SieveOptions sieve_options{.threads = opt.threads};
  const PrimePowerMap map = factor_window_sieve(spec, opt.n, sieve_options);
  if (opt.format == "csv") {
    std::string body = "p,e\n";
    for (const auto& [p, e] : map.entries) {
      body += std::to_string(p) + ',' + std::to_string(e) + '\n';
    }
    return body;
  }
  ordered_json j;
  j["spec"] = spec_json(spec);
  j["n"] = opt.n;
  j["method"] = "sieve";
  j["bound"] = make_window(spec, opt.n).term_hi;
  j["count"] = map.entries.size();
  ordered_json factors = ordered_json::object();
  for (const auto& [p, e] : map.entries) factors[std::to_string(p)] = e;
  j["factors"] = factors;
  return j.dump(2) + "\n";
}

std::string run_theta(const Options& opt) {
  if (opt.x > static_cast<double>(opt.max_sieve)) {
    std::ostringstream msg;
    msg << "theta bound x = " << opt.x << " exceeds the sieve budget "
        << opt.max_sieve << " (raise --max-sieve)";
    throw ResourceError(msg.str());
  }
  const double value = theta(opt.x, opt.h, opt.k);
  if (opt.format == "csv") {
    return "x,h,k,theta\n" + decimal12(opt.x) + ',' + std::to_string(opt.h) +
           ',' + std::to_string(opt.k) + ',' + decimal12(value) + '\n';
  }
  ordered_json j;
  j["x"] = opt.x;
  j["h"] = opt.h;
  j["k"] = opt.k;
  j["theta"] = value;
  return j.dump(2) + "\n";
}

std::string run_converge(const Options& opt) {
  const ProgressionSpec spec = normalize(opt.a, opt.b, opt.l, opt.m);
  const LogLcmMethod method =
      opt.method.empty() ? LogLcmMethod::sieve : parse_method(opt.method);
  const SieveOptions sieve_options{.threads = opt.threads};
  const ExperimentReport report =
      converge(spec, parse_n_grid(opt.n_grid), method, sieve_options,
               opt.max_sieve);
  return opt.format == "csv" ? to_csv(report) : to_json(report);
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const bool small = opt.grid_small;
  CheckResult total;

  CheckResult r = check_fold_sieve_agreement(small ? 4 : 6, -5, 6, 4,
                                             small ? 12 : 50);
  out << "fold/sieve agreement: " << r.checks << " checks\n";
  total.merge(std::move(r));

  r = check_support_characterization(small ? 4 : 5, small ? 4 : 5, 4,
                                     small ? 25 : 200);
  out << "support characterization: " << r.checks << " checks\n";
  total.merge(std::move(r));

  r = check_class_sum_assembly(small ? 4 : 5, small ? 4 : 5, 4,
                               small ? 25 : 200, 1e-6);
  out << "class-sum assembly: " << r.checks << " checks\n";
  total.merge(std::move(r));

  r = check_constant_shortcuts();
  out << "constant shortcuts: " << r.checks << " checks\n";
  total.merge(std::move(r));

  if (!total.ok()) {
    for (const std::string& failure : total.failures) {
      err << "FAIL " << failure << "\n";
    }
    err << total.failures.size() << " of " << total.checks
        << " checks failed\n";
    return 2;
  }
  out << "all " << total.checks << " checks passed\n";
  return 0;
}

void emit(const std::string& body, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output path '" + opt.output +
                                "'");
  }
  file << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Exact lcm of arithmetic-progression windows, asymptotic constants, "
      "and convergence experiments"};
  app.name("lcmlab");
  app.require_subcommand(1);
  // --h and --k are option names (theta), so help stays long-form only.
  app.set_help_flag("--help", "print this help message and exit");

  Options opt;

  const auto add_spec_flags = [&](CLI::App* cmd) {
    cmd->add_option("--a", opt.a, "progression step a (a >= 1)");
    cmd->add_option("--b", opt.b, "progression offset b (a + b >= 1)");
    cmd->add_option("--l", opt.l, "window upper coefficient l (l > m)");
    cmd->add_option("--m", opt.m, "window lower coefficient m (m >= 0)");
  };
  const auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", opt.output,
                    "write the body to this path instead of stdout");
  };
  const auto add_engine_flags = [&](CLI::App* cmd) {
    cmd->add_option("--threads", opt.threads, "sieve worker threads")
        ->envname("LCMLAB_THREADS")
        ->check(CLI::Range(1, 1024));
    cmd->add_option("--max-sieve", opt.max_sieve,
                    "largest allowed window bound b + a*l*n")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* c_constant = app.add_subcommand(
      "constant", "asymptotic constant A with per-residue breakdown");
  add_spec_flags(c_constant);
  add_output_flags(c_constant);

  CLI::App* c_lcm =
      app.add_subcommand("lcm", "exact window lcm as a big integer");
  add_spec_flags(c_lcm);
  add_output_flags(c_lcm);
  add_engine_flags(c_lcm);
  c_lcm->add_option("--n", opt.n, "window scale n")->check(CLI::PositiveNumber);
  c_lcm->add_option("--method", opt.method, "gcd-fold or sieve");

  CLI::App* c_logl =
      app.add_subcommand("logl", "log of the window lcm by any method");
  add_spec_flags(c_logl);
  add_output_flags(c_logl);
  add_engine_flags(c_logl);
  c_logl->add_option("--n", opt.n, "window scale n")
      ->check(CLI::PositiveNumber);
  c_logl->add_option("--method", opt.method,
                     "gcd-fold, sieve or theta-intervals");

  CLI::App* c_primes = app.add_subcommand(
      "primes", "prime-power support of the window lcm");
  add_spec_flags(c_primes);
  add_output_flags(c_primes);
  add_engine_flags(c_primes);
  c_primes->add_option("--n", opt.n, "window scale n")
      ->check(CLI::PositiveNumber);
  c_primes->add_option("--method", opt.method, "sieve");

  CLI::App* c_theta =
      app.add_subcommand("theta", "Chebyshev theta for a residue class");
  add_output_flags(c_theta);
  add_engine_flags(c_theta);
  c_theta->add_option("--x", opt.x, "upper bound")->required();
  c_theta->add_option("--h", opt.h, "modulus h (h >= 1)");
  c_theta->add_option("--k", opt.k, "residue class k, gcd(h, k) = 1");

  CLI::App* c_converge = app.add_subcommand(
      "converge", "ratio log L / n against the asymptotic constant");
  add_spec_flags(c_converge);
  add_output_flags(c_converge);
  add_engine_flags(c_converge);
  c_converge
      ->add_option("--n-grid", opt.n_grid,
                   "ascending n values, e.g. 10^3,10^4,10^5")
      ->required();
  c_converge->add_option("--method", opt.method, "sieve or theta-intervals");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "cross-check the engines against brute-force oracles");
  c_verify->add_flag("--grid-small", opt.grid_small,
                     "smaller grids for a quick run");

  for (CLI::App* sub : {c_constant, c_lcm, c_logl, c_primes, c_theta,
                        c_converge, c_verify}) {
    sub->set_help_flag("--help", "print this help message and exit");
  }

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("lcmlab");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_verify->parsed()) {
      return run_verify(opt, out, err);
    }
    std::string body;
    if (c_constant->parsed()) {
      body = run_constant(opt);
    } else if (c_lcm->parsed()) {
      body = run_lcm(opt);
    } else if (c_logl->parsed()) {
      body = run_logl(opt);
    } else if (c_primes->parsed()) {
      body = run_primes(opt);
    } else if (c_theta->parsed()) {
      body = run_theta(opt);
    } else if (c_converge->parsed()) {
      body = run_converge(opt);
    }
    emit(body, opt, out);
    return 0;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lcmlab::cli
