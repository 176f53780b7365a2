#pragma once

/**
 * @file bench.hpp
 * @brief Wall-clock comparison of the summation strategies.
 *
 * CSV: strategy,p,t,a,d,reps,median_ms,match
 * `match` compares each result with the reference ground-truth result
 * (oracle when requested, else the first ground-truth method listed);
 * "na" when there is nothing independent to compare against.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "apsum/strategies.hpp"

namespace apsum {

struct BenchLimits {
  std::uint64_t p_max = 1000;
  std::uint64_t t_max = 1'000'000;
  /// p * t bound for the brute-force oracle.
  std::uint64_t oracle_work = 10'000'000;
};

struct BenchScenario {
  std::uint64_t p = 0;
  std::uint64_t t = 1;
  GaussianRational a{1};
  GaussianRational d{1};
};

struct BenchRow {
  Method method{};
  BenchScenario scenario;
  unsigned reps = 1;
  double median_ms = 0;
  std::optional<bool> match;
  GaussianRational value;
};

inline void check_bench_limits(const BenchScenario& s, const std::vector<Method>& methods,
                               const BenchLimits& limits) {
  if (s.p > limits.p_max) {
    throw Error(ErrorCode::SizeLimit, "p = " + std::to_string(s.p) + " exceeds cap " +
                                          std::to_string(limits.p_max));
  }
  if (s.t > limits.t_max) {
    throw Error(ErrorCode::SizeLimit, "t = " + std::to_string(s.t) + " exceeds cap " +
                                          std::to_string(limits.t_max));
  }
  const bool with_oracle = std::find(methods.begin(), methods.end(), Method::Oracle) != methods.end();
  if (with_oracle && s.p * s.t > limits.oracle_work) {
    throw Error(ErrorCode::SizeLimit, "oracle work p*t exceeds cap " +
                                          std::to_string(limits.oracle_work));
  }
}

/// Runs every method on every scenario `reps` times. Limits apply unless
/// `limits` is empty.
inline std::vector<BenchRow> benchmark(const std::vector<Method>& methods,
                                       const std::vector<BenchScenario>& scenarios, unsigned reps,
                                       const std::optional<BenchLimits>& limits = BenchLimits{}) {
  reps = std::max(1u, reps);
  if (limits) {
    for (const auto& s : scenarios) check_bench_limits(s, methods, *limits);
  }
  std::vector<BenchRow> rows;
  for (const auto& s : scenarios) {
    const PowerSumQuery q{s.a, s.d, s.t, s.p, false};
    const std::size_t first = rows.size();
    for (Method m : methods) {
      std::vector<double> times;
      GaussianRational value;
      for (unsigned r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        value = compute(m, q);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
      }
      std::sort(times.begin(), times.end());
      const double median = times.size() % 2 == 1
                                ? times[times.size() / 2]
                                : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
      rows.push_back({m, s, reps, median, std::nullopt, std::move(value)});
    }

    // Reference: oracle if present, else the first ground-truth method.
    std::optional<std::size_t> ref;
    for (std::size_t i = first; i < rows.size(); ++i) {
      if (rows[i].method == Method::Oracle) ref = i;
    }
    for (std::size_t i = first; i < rows.size() && !ref; ++i) {
      if (is_ground_truth(rows[i].method)) ref = i;
    }
    if (!ref) continue;
    bool all_agree = true;
    bool any_other = false;
    for (std::size_t i = first; i < rows.size(); ++i) {
      if (i == *ref) continue;
      rows[i].match = rows[i].value == rows[*ref].value;
      if (is_ground_truth(rows[i].method)) {
        any_other = true;
        all_agree = all_agree && *rows[i].match;
      }
    }
    if (any_other) rows[*ref].match = all_agree;
  }
  return rows;
}

inline void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& os) {
  os << "strategy,p,t,a,d,reps,median_ms,match\n";
  for (const auto& r : rows) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << r.median_ms;
    os << to_string(r.method) << ',' << r.scenario.p << ',' << r.scenario.t << ",\""
       << r.scenario.a.to_string() << "\",\"" << r.scenario.d.to_string() << "\"," << r.reps << ','
       << ms.str() << ',' << (r.match ? (*r.match ? "true" : "false") : "na") << '\n';
  }
}

}  // namespace apsum
