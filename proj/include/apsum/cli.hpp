#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: compute | faulhaber | audit | bench.
 *
 * Exit codes: 0 success, 2 usage / parse / I/O error, 3 unexpected audit
 * verdict. The entry point is a plain function so tests can drive it with
 * in-memory streams.
 */

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "apsum/audit.hpp"
#include "apsum/bench.hpp"
#include "apsum/report.hpp"
#include "apsum/strategies.hpp"
#include "apsum/text.hpp"
#include "apsum/triangular.hpp"

namespace apsum {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnexpectedVerdict = 3;

/// Powers at which the default-grid audit found the verbatim closed form
/// exact at every grid point. The alternating closed form has none.
inline bool closed_form_validated(std::uint64_t p, bool alternating) {
  return !alternating && (p == 2 || p == 3);
}

namespace detail {

inline std::vector<Method> parse_method_list(const std::string& s) {
  std::vector<Method> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string token = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? s.size() + 1 : comma + 1;
    if (token.empty()) continue;
    const auto m = parse_method(token);
    if (!m) throw Error(ErrorCode::UsageError, "unknown method \"" + token + "\"");
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  }
  if (out.empty()) throw Error(ErrorCode::UsageError, "no methods given");
  return out;
}

inline ojson params_json(const PowerSumQuery& q) {
  return ojson{{"a", q.a.to_string()},
               {"d", q.d.to_string()},
               {"t", q.t},
               {"p", q.p},
               {"alternating", q.alternating}};
}

/// Writes to the file at `path`, or to `fallback` when path is empty or "-".
template <class Writer>
void write_output(const std::string& path, std::ostream& fallback, Writer&& writer) {
  if (path.empty() || path == "-") {
    writer(fallback);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open \"" + path + "\" for writing");
  writer(out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to \"" + path + "\" failed");
}

}  // namespace detail

/// `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power sums of arithmetic progressions over Q(i)", "apsum"};
  app.require_subcommand(1);

  // compute
  auto* compute_cmd = app.add_subcommand("compute", "Power sum (or alternating sum) by one method");
  std::string c_a = "1", c_d = "1", c_method = "forward", c_format = "text";
  std::uint64_t c_t = 0, c_p = 0;
  bool c_alternating = false;
  compute_cmd->add_option("--a", c_a, "start value (scalar grammar, e.g. 3/2+5/7i)")->capture_default_str();
  compute_cmd->add_option("--d", c_d, "common difference")->capture_default_str();
  compute_cmd->add_option("--t", c_t, "term count")->required()->check(CLI::PositiveNumber);
  compute_cmd->add_option("--p", c_p, "power")->required();
  compute_cmd->add_flag("--alternating", c_alternating, "alternating signs, starting positive");
  compute_cmd->add_option("--method", c_method, "oracle|forward|elim|closed")
      ->check(CLI::IsMember({"oracle", "forward", "elim", "closed"}))
      ->capture_default_str();
  compute_cmd->add_option("--format", c_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  // faulhaber
  auto* faulhaber_cmd = app.add_subcommand("faulhaber", "Closed polynomial in t for the power sum");
  std::string f_a = "1", f_d = "1", f_format = "text";
  std::uint64_t f_p = 0;
  faulhaber_cmd->add_option("--p", f_p, "power")->required();
  faulhaber_cmd->add_option("--a", f_a, "start value")->capture_default_str();
  faulhaber_cmd->add_option("--d", f_d, "common difference")->capture_default_str();
  faulhaber_cmd->add_option("--format", f_format)
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "Check every printed identity against the oracle");
  std::uint64_t a_p_max = 12, a_t_max = 8;
  std::string a_identities, a_out, a_format = "jsonl", a_expected;
  bool a_fail_unexpected = false;
  audit_cmd->add_option("--p-max", a_p_max, "largest power / system index")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  audit_cmd->add_option("--t-max", a_t_max, "largest term count")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  auto* identities_opt = audit_cmd->add_option(
      "--identities", a_identities, "comma list, e.g. EQ1,THM5:m=1 (default: all)");
  audit_cmd->add_option("--out", a_out, "report path (default: stdout)");
  audit_cmd->add_option("--format", a_format)->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
  audit_cmd->add_flag("--fail-on-unexpected", a_fail_unexpected,
                      "exit 3 when a verdict differs from --expected");
  audit_cmd->add_option("--expected", a_expected, "JSONL report holding expected verdicts");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time the strategies on one scenario");
  std::uint64_t b_p = 0, b_t = 0;
  std::string b_a = "1", b_d = "1", b_methods = "forward,oracle", b_out;
  unsigned b_reps = 3;
  bool b_unlocked = false;
  bench_cmd->add_option("--p", b_p, "power")->required();
  bench_cmd->add_option("--t", b_t, "term count")->required()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--a", b_a)->capture_default_str();
  bench_cmd->add_option("--d", b_d)->capture_default_str();
  bench_cmd->add_option("--methods", b_methods, "comma list of oracle,forward,elim,closed")
      ->capture_default_str();
  bench_cmd->add_option("--reps", b_reps)->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--out", b_out, "CSV path (default: stdout)");
  bench_cmd->add_flag("--unlocked", b_unlocked, "lift the resource caps");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute_cmd->parsed()) {
      const PowerSumQuery q{parse_scalar(c_a), parse_scalar(c_d), c_t, c_p, c_alternating};
      const Method method = *parse_method(c_method);
      if (method != Method::Oracle && q.d.is_zero()) {
        throw Error(ErrorCode::UsageError, "--d must be nonzero for method " + c_method);
      }
      if ((method == Method::Elim || method == Method::Closed) && q.p < 2) {
        throw Error(ErrorCode::UsageError, "method " + c_method + " needs --p >= 2");
      }
      const GaussianRational value = compute(method, q);
      if (c_format == "json") {
        ojson j = ojson::object();
        j["value"] = scalar_json(value);
        j["method"] = c_method;
        j["params"] = detail::params_json(q);
        out << j.dump() << '\n';
      } else {
        if (method == Method::Closed && !closed_form_validated(q.p, q.alternating)) {
          err << "warning: closed is the verbatim published formula; the audit found it "
                 "inexact at p = "
              << q.p << (q.alternating ? " (alternating)" : "")
              << ". See `apsum audit` for the measured region.\n";
        }
        out << value.to_string() << '\n';
      }
      return kExitOk;
    }

    if (faulhaber_cmd->parsed()) {
      const GaussianRational a = parse_scalar(f_a);
      const GaussianRational d = parse_scalar(f_d);
      if (d.is_zero()) throw Error(ErrorCode::UsageError, "--d must be nonzero");
      const UniPolynomial poly = solve_symbolic(f_p, a, d).back();
      if (f_format == "json") {
        ojson coeffs = ojson::array();
        for (const auto& c : poly.coefficients()) coeffs.push_back(scalar_json(c));
        ojson j = ojson::object();
        j["polynomial"] = render(poly);
        j["coefficients"] = std::move(coeffs);
        j["params"] = ojson{{"a", a.to_string()}, {"d", d.to_string()}, {"p", f_p}};
        out << j.dump() << '\n';
      } else {
        out << render(poly, f_format == "latex" ? PolyStyle::Latex : PolyStyle::Text) << '\n';
      }
      return kExitOk;
    }

    if (audit_cmd->parsed()) {
      if (a_fail_unexpected && a_expected.empty()) {
        throw Error(ErrorCode::UsageError, "--fail-on-unexpected needs --expected <file>");
      }
      const IdentityFilter filter =
          identities_opt->count() > 0 ? parse_identity_filter(a_identities) : IdentityFilter::all();
      std::optional<std::map<std::string, Verdict>> expected;
      if (!a_expected.empty()) expected = load_expected_verdicts(a_expected);

      AuditGrid grid = default_grid();
      grid.p_max = a_p_max;
      grid.t_max = a_t_max;
      unsigned workers = 1;
      if (const char* env = std::getenv("APSUM_AUDIT_WORKERS"); env != nullptr && *env != '\0') {
        workers = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
      }
      const AuditReport report = run_audit(grid, filter, workers);
      const ReportFormat format = a_format == "csv" ? ReportFormat::Csv : ReportFormat::Jsonl;
      detail::write_output(a_out, out, [&](std::ostream& os) { emit_report(report, format, os); });
      std::ostream& summary_stream = (a_out.empty() || a_out == "-") ? err : out;
      write_summary(report, summary_stream);

      if (expected) {
        const auto mismatches = unexpected_verdicts(report, *expected);
        if (!mismatches.empty()) {
          err << mismatches.size() << " case(s) differ from " << a_expected << '\n';
          for (std::size_t i = 0; i < std::min<std::size_t>(mismatches.size(), 20); ++i) {
            err << "  " << mismatches[i] << '\n';
          }
          if (a_fail_unexpected) return kExitUnexpectedVerdict;
        }
      }
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      const auto methods = detail::parse_method_list(b_methods);
      const BenchScenario scenario{b_p, b_t, parse_scalar(b_a), parse_scalar(b_d)};
      for (Method m : methods) {
        if (m != Method::Oracle && scenario.d.is_zero()) {
          throw Error(ErrorCode::UsageError, "--d must be nonzero for method " + std::string(to_string(m)));
        }
        if ((m == Method::Elim || m == Method::Closed) && scenario.p < 2) {
          throw Error(ErrorCode::UsageError, std::string(to_string(m)) + " needs --p >= 2");
        }
      }
      std::optional<BenchLimits> limits;
      if (!b_unlocked) limits = BenchLimits{};
      std::vector<BenchRow> rows;
      try {
        rows = benchmark(methods, {scenario}, b_reps, limits);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SizeLimit) throw;
        throw Error(ErrorCode::UsageError, std::string(e.what()) + " (pass --unlocked to lift)");
      }
      detail::write_output(b_out, out, [&](std::ostream& os) { write_bench_csv(rows, os); });
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace apsum
