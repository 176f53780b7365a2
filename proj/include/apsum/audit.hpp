#pragma once

/**
 * @file audit.hpp
 * @brief Exact audit of every printed identity over a parameter grid.
 *
 * Each case pairs a reference value (brute-force oracle or direct
 * definition) with the value the identity under test claims, and stores the
 * exact residual claimed - reference. HOLDS iff the residual is zero.
 *
 * Index column per identity:
 *   EQ1_RECURRENCE_L, EQ2_RECURRENCE_T, THM2_DET, M1_DETERMINANT_BRIDGE -> k
 *   THM4_STABLE, THM5_EXPANSION, EQ5_CLOSED_L, EQ9_CLOSED_T           -> n = p + 1
 */

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "apsum/elimination.hpp"
#include "apsum/series.hpp"
#include "apsum/triangular.hpp"

namespace apsum {

enum class IdentityId {
  EQ1_RECURRENCE_L,
  EQ2_RECURRENCE_T,
  THM2_DET,
  THM4_STABLE,
  THM5_EXPANSION,
  EQ5_CLOSED_L,
  EQ9_CLOSED_T,
  M1_DETERMINANT_BRIDGE,
};

inline constexpr std::array<IdentityId, 8> kAllIdentities{
    IdentityId::EQ1_RECURRENCE_L, IdentityId::EQ2_RECURRENCE_T, IdentityId::THM2_DET,
    IdentityId::THM4_STABLE,      IdentityId::THM5_EXPANSION,   IdentityId::EQ5_CLOSED_L,
    IdentityId::EQ9_CLOSED_T,     IdentityId::M1_DETERMINANT_BRIDGE};

constexpr std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::EQ1_RECURRENCE_L: return "EQ1_RECURRENCE_L";
    case IdentityId::EQ2_RECURRENCE_T: return "EQ2_RECURRENCE_T";
    case IdentityId::THM2_DET: return "THM2_DET";
    case IdentityId::THM4_STABLE: return "THM4_STABLE";
    case IdentityId::THM5_EXPANSION: return "THM5_EXPANSION";
    case IdentityId::EQ5_CLOSED_L: return "EQ5_CLOSED_L";
    case IdentityId::EQ9_CLOSED_T: return "EQ9_CLOSED_T";
    case IdentityId::M1_DETERMINANT_BRIDGE: return "M1_DETERMINANT_BRIDGE";
  }
  return "UNKNOWN";
}

/// Short aliases accepted on the command line.
constexpr std::string_view short_name(IdentityId id) {
  switch (id) {
    case IdentityId::EQ1_RECURRENCE_L: return "EQ1";
    case IdentityId::EQ2_RECURRENCE_T: return "EQ2";
    case IdentityId::THM2_DET: return "THM2";
    case IdentityId::THM4_STABLE: return "THM4";
    case IdentityId::THM5_EXPANSION: return "THM5";
    case IdentityId::EQ5_CLOSED_L: return "EQ5";
    case IdentityId::EQ9_CLOSED_T: return "EQ9";
    case IdentityId::M1_DETERMINANT_BRIDGE: return "M1";
  }
  return "UNKNOWN";
}

/// Whether the index column holds k (system identities) or n = p + 1.
constexpr bool indexed_by_k(IdentityId id) {
  return id == IdentityId::EQ1_RECURRENCE_L || id == IdentityId::EQ2_RECURRENCE_T ||
         id == IdentityId::THM2_DET || id == IdentityId::M1_DETERMINANT_BRIDGE;
}

inline std::optional<IdentityId> parse_identity(std::string_view s) {
  for (IdentityId id : kAllIdentities) {
    if (s == to_string(id) || s == short_name(id)) return id;
  }
  return std::nullopt;
}

enum class Verdict { HOLDS, FAILS, ERROR, SKIPPED };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::HOLDS: return "HOLDS";
    case Verdict::FAILS: return "FAILS";
    case Verdict::ERROR: return "ERROR";
    case Verdict::SKIPPED: return "SKIPPED";
  }
  return "UNKNOWN";
}

inline std::optional<Verdict> parse_verdict(std::string_view s) {
  for (Verdict v : {Verdict::HOLDS, Verdict::FAILS, Verdict::ERROR, Verdict::SKIPPED}) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

struct ScalarSample {
  GaussianRational a;
  GaussianRational d;
};

struct AuditGrid {
  std::uint64_t p_max = 12;
  std::uint64_t t_max = 8;
  std::vector<ScalarSample> samples;
};

inline std::vector<ScalarSample> default_samples() {
  const auto q = [](std::int64_t n, std::int64_t d) { return make_rational(n, d); };
  return {
      {GaussianRational(1), GaussianRational(1)},
      {GaussianRational(0), GaussianRational(1)},
      {GaussianRational(2), GaussianRational(3)},
      {GaussianRational(-1), GaussianRational(2)},
      {GaussianRational(q(1, 2)), GaussianRational(q(1, 3))},
      {GaussianRational::i(), GaussianRational(1)},
      {GaussianRational(1, 1), GaussianRational(1, -1)},
      {GaussianRational(q(3, 2), q(5, 7)), GaussianRational(2)},
  };
}

inline AuditGrid default_grid() { return {12, 8, default_samples()}; }

/// Which identities to run. An empty set runs nothing; `thm5_m` restricts the
/// expansion identity to one m.
struct IdentityFilter {
  std::set<IdentityId> ids;
  std::optional<std::uint64_t> thm5_m;

  static IdentityFilter all() { return {{kAllIdentities.begin(), kAllIdentities.end()}, {}}; }
  bool includes(IdentityId id) const { return ids.contains(id); }
};

/// Comma-separated list of names or aliases; "THM5:m=<int>" pins m.
inline IdentityFilter parse_identity_filter(std::string_view spec) {
  IdentityFilter filter;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    std::string_view token =
        spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    pos = comma == std::string_view::npos ? spec.size() + 1 : comma + 1;
    if (token.empty()) continue;
    std::string_view name = token;
    std::optional<std::uint64_t> m;
    if (const std::size_t colon = token.find(':'); colon != std::string_view::npos) {
      name = token.substr(0, colon);
      const std::string_view arg = token.substr(colon + 1);
      if (arg.size() < 3 || arg.substr(0, 2) != "m=" ||
          !std::all_of(arg.begin() + 2, arg.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorCode::UsageError, "bad identity argument \"" + std::string(token) + "\"");
      }
      m = std::stoull(std::string(arg.substr(2)));
    }
    const auto id = parse_identity(name);
    if (!id) throw Error(ErrorCode::UsageError, "unknown identity \"" + std::string(name) + "\"");
    if (m && *id != IdentityId::THM5_EXPANSION) {
      throw Error(ErrorCode::UsageError, "only THM5 takes an m argument");
    }
    filter.ids.insert(*id);
    if (m) filter.thm5_m = m;
  }
  return filter;
}

struct AuditCase {
  IdentityId identity{};
  std::uint64_t index = 0;  // k or n, see file comment
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> t;
  std::size_t sample = 0;
  GaussianRational a;
  GaussianRational d;
  std::optional<GaussianRational> reference;
  std::optional<GaussianRational> claimed;
  std::optional<GaussianRational> residual;
  Verdict verdict = Verdict::SKIPPED;
  std::string detail;  // error code for ERROR, reason for SKIPPED

  auto key() const { return std::tie(identity, index, m, t, sample); }
};

struct IdentitySummary {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t errors = 0;
  std::size_t skipped = 0;
  /// Lexicographically smallest (index, m, t) among FAILS cases.
  std::optional<std::tuple<std::uint64_t, std::optional<std::uint64_t>, std::optional<std::uint64_t>>>
      minimal_failure;

  std::size_t total() const { return holds + fails + errors + skipped; }
};

struct AuditReport {
  std::vector<AuditCase> cases;
  std::map<IdentityId, IdentitySummary> summary;
};

namespace detail {

inline AuditCase make_case(IdentityId id, std::uint64_t index, std::optional<std::uint64_t> m,
                           std::optional<std::uint64_t> t, std::size_t sample,
                           const ScalarSample& s) {
  AuditCase c;
  c.identity = id;
  c.index = index;
  c.m = m;
  c.t = t;
  c.sample = sample;
  c.a = s.a;
  c.d = s.d;
  return c;
}

inline void settle(AuditCase& c, GaussianRational reference, GaussianRational claimed) {
  c.residual = claimed - reference;
  c.verdict = c.residual->is_zero() ? Verdict::HOLDS : Verdict::FAILS;
  c.reference = std::move(reference);
  c.claimed = std::move(claimed);
}

inline void skip(AuditCase& c, std::string reason) {
  c.verdict = Verdict::SKIPPED;
  c.detail = std::move(reason);
}

/// Runs `body`; an apsum::Error turns the case into ERROR with its code.
template <class Body>
void guarded(AuditCase& c, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    c.reference.reset();
    c.claimed.reset();
    c.residual.reset();
    c.verdict = Verdict::ERROR;
    c.detail = std::string(to_string(e.code()));
  }
}

/// One unit of work: a single identity at one (t, sample); t is absent for
/// identities that do not depend on it.
struct Batch {
  IdentityId identity;
  std::optional<std::uint64_t> t;
  std::size_t sample;
};

inline void run_recurrence(SystemKind kind, IdentityId id, std::uint64_t p_max, std::uint64_t t,
                           std::size_t idx, const ScalarSample& s, std::vector<AuditCase>& out) {
  for (std::uint64_t k = 0; k <= p_max; ++k) {
    AuditCase c = make_case(id, k, std::nullopt, t, idx, s);
    guarded(c, [&] {
      const PowerSumQuery q{s.a, s.d, t, 0, kind == SystemKind::T};
      const TriangularSystem sys = build_system(kind, k, q);
      // Left side with oracle values, right side as printed.
      GaussianRational lhs;
      for (std::uint64_t j = 0; j <= k; ++j) {
        PowerSumQuery qj = q;
        qj.p = j;
        lhs += sys.row(k)[j] * (kind == SystemKind::L ? oracle_L(qj) : oracle_T(qj));
      }
      settle(c, sys.rhs(k), lhs);
    });
    out.push_back(std::move(c));
  }
}

inline std::vector<AuditCase> run_batch(const Batch& b, const AuditGrid& grid,
                                        const IdentityFilter& filter) {
  std::vector<AuditCase> out;
  const ScalarSample& s = grid.samples[b.sample];
  const std::uint64_t t = b.t.value_or(1);
  const auto query = [&](std::uint64_t p, bool alternating) {
    return PowerSumQuery{s.a, s.d, t, p, alternating};
  };

  switch (b.identity) {
    case IdentityId::EQ1_RECURRENCE_L:
      run_recurrence(SystemKind::L, b.identity, grid.p_max, t, b.sample, s, out);
      break;

    case IdentityId::EQ2_RECURRENCE_T:
      run_recurrence(SystemKind::T, b.identity, grid.p_max, t, b.sample, s, out);
      break;

    case IdentityId::THM2_DET:
      for (std::uint64_t k = 0; k <= grid.p_max; ++k) {
        AuditCase c = make_case(b.identity, k, std::nullopt, std::nullopt, b.sample, s);
        guarded(c, [&] {
          const GaussianRational det = determinant(build_system(SystemKind::L, k, query(0, false)));
          settle(c, GaussianRational(factorial(k + 1)) * pow_int(s.d, k + 1), det);
        });
        out.push_back(std::move(c));
      }
      break;

    case IdentityId::THM4_STABLE:
      for (std::uint64_t p = 0; p <= grid.p_max; ++p) {
        AuditCase c = make_case(b.identity, p + 1, std::nullopt, t, b.sample, s);
        if (p < 2) {
          skip(c, "p < 2");
        } else {
          guarded(c, [&] {
            const PowerSumQuery q = query(p, false);
            if (!STable(p + 1, q).recheck().empty()) {
              throw Error(ErrorCode::TableInconsistent, "S-table re-check failed");
            }
            settle(c, oracle_L(q), L_via_elimination(q));
          });
        }
        out.push_back(std::move(c));
      }
      break;

    case IdentityId::THM5_EXPANSION:
      for (std::uint64_t p = 0; p <= grid.p_max; ++p) {
        const std::uint64_t n = p + 1;
        if (n < 4) {
          AuditCase c = make_case(b.identity, n, std::nullopt, t, b.sample, s);
          skip(c, "n < 4");
          out.push_back(std::move(c));
          continue;
        }
        std::optional<STable> table;
        std::optional<GaussianRational> reference;
        std::optional<Error> setup_error;
        try {
          table.emplace(n, query(p, false));
          reference = GaussianRational(n) * s.d * oracle_L(query(p, false));
        } catch (const Error& e) {
          setup_error = e;
        }
        for (std::uint64_t m = 0; m + 3 <= n; ++m) {
          if (filter.thm5_m && *filter.thm5_m != m) continue;
          AuditCase c = make_case(b.identity, n, m, t, b.sample, s);
          guarded(c, [&] {
            if (setup_error) throw *setup_error;
            settle(c, *reference, theorem5_rhs(n, m, *table));
          });
          out.push_back(std::move(c));
        }
      }
      break;

    case IdentityId::EQ5_CLOSED_L:
      for (std::uint64_t p = 0; p <= grid.p_max; ++p) {
        AuditCase c = make_case(b.identity, p + 1, std::nullopt, t, b.sample, s);
        if (p < 2) {
          skip(c, "p < 2");
        } else {
          guarded(c, [&] {
            const PowerSumQuery q = query(p, false);
            settle(c, oracle_L(q), closed_form_L(q));
          });
        }
        out.push_back(std::move(c));
      }
      break;

    case IdentityId::EQ9_CLOSED_T:
      for (std::uint64_t p = 0; p <= grid.p_max; ++p) {
        AuditCase c = make_case(b.identity, p + 1, std::nullopt, t, b.sample, s);
        if (p < 2) {
          skip(c, "p < 2");
        } else {
          guarded(c, [&] {
            const PowerSumQuery q = query(p, true);
            GaussianRational reference = oracle_T(q);
            if (reference != split_T(q)) {
              throw Error(ErrorCode::ReferenceMismatch, "oracle_T and split_T disagree");
            }
            settle(c, std::move(reference), closed_form_T(q));
          });
        }
        out.push_back(std::move(c));
      }
      break;

    case IdentityId::M1_DETERMINANT_BRIDGE:
      for (std::uint64_t k = 0; k <= grid.p_max; ++k) {
        AuditCase c = make_case(b.identity, k, std::nullopt, t, b.sample, s);
        if (k < 2) {
          skip(c, "k < 2");
        } else if (k > kCramerMaxKMax) {
          skip(c, "k above cofactor-expansion cap");
        } else {
          guarded(c, [&] {
            const PowerSumQuery q = query(0, false);
            settle(c, cramer_numerator(k, q), determinant_bridge_value(k, q));
          });
        }
        out.push_back(std::move(c));
      }
      break;
  }
  return out;
}

}  // namespace detail

inline std::map<IdentityId, IdentitySummary> summarize(const std::vector<AuditCase>& cases) {
  std::map<IdentityId, IdentitySummary> summary;
  for (const AuditCase& c : cases) {
    IdentitySummary& s = summary[c.identity];
    switch (c.verdict) {
      case Verdict::HOLDS: ++s.holds; break;
      case Verdict::FAILS: {
        ++s.fails;
        auto key = std::make_tuple(c.index, c.m, c.t);
        if (!s.minimal_failure || key < *s.minimal_failure) s.minimal_failure = key;
        break;
      }
      case Verdict::ERROR: ++s.errors; break;
      case Verdict::SKIPPED: ++s.skipped; break;
    }
  }
  return summary;
}

/// Evaluates the filtered identities over the grid. `workers` = 0 picks the
/// hardware concurrency. The case order is canonical regardless of scheduling.
inline AuditReport run_audit(const AuditGrid& grid, const IdentityFilter& filter,
                             unsigned workers = 1) {
  std::vector<detail::Batch> batches;
  for (IdentityId id : kAllIdentities) {
    if (!filter.includes(id)) continue;
    for (std::size_t s = 0; s < grid.samples.size(); ++s) {
      if (id == IdentityId::THM2_DET) {
        batches.push_back({id, std::nullopt, s});
        continue;
      }
      for (std::uint64_t t = 1; t <= grid.t_max; ++t) batches.push_back({id, t, s});
    }
  }

  std::vector<std::vector<AuditCase>> results(batches.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, batches.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < batches.size(); ++i) results[i] = detail::run_batch(batches[i], grid, filter);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < batches.size(); i = next++) {
          results[i] = detail::run_batch(batches[i], grid, filter);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  AuditReport report;
  for (auto& r : results) {
    for (auto& c : r) report.cases.push_back(std::move(c));
  }
  std::sort(report.cases.begin(), report.cases.end(),
            [](const AuditCase& x, const AuditCase& y) { return x.key() < y.key(); });
  report.summary = summarize(report.cases);
  return report;
}

}  // namespace apsum
