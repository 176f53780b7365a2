#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "apsum/elimination.hpp"
#include "apsum/series.hpp"
#include "apsum/triangular.hpp"

namespace apsum {

/// Oracle, Forward and Elim are ground-truth paths. Closed is the verbatim
/// published closed form and is only as good as the audit says.
enum class Method { Oracle, Forward, Elim, Closed };

constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Forward: return "forward";
    case Method::Elim: return "elim";
    case Method::Closed: return "closed";
  }
  return "unknown";
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::Oracle, Method::Forward, Method::Elim, Method::Closed}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

constexpr bool is_ground_truth(Method m) { return m != Method::Closed; }

namespace detail {

inline GaussianRational plain_sum(Method m, const PowerSumQuery& q) {
  switch (m) {
    case Method::Oracle: return oracle_L(q);
    case Method::Forward: return solve_power_sums(SystemKind::L, q.p, q).back();
    case Method::Elim: return L_via_elimination(q);
    case Method::Closed: return closed_form_L(q);
  }
  return {};
}

}  // namespace detail

/// Plain or alternating power sum by the chosen method. The alternating sum
/// for Forward and Elim goes through the even/odd split into two plain sums
/// with step 2d (the verbatim alternating system is not a ground-truth path).
inline GaussianRational compute(Method method, const PowerSumQuery& q) {
  require_terms(q);
  if (method != Method::Oracle) require_nonzero_step(q.d);
  if ((method == Method::Elim || method == Method::Closed) && q.p < 2) {
    throw Error(ErrorCode::UnsupportedPower,
                std::string(to_string(method)) + " needs p >= 2");
  }
  if (!q.alternating) return detail::plain_sum(method, q);
  if (method == Method::Oracle) return oracle_T(q);
  if (method == Method::Closed) return closed_form_T(q);

  const auto part = [&](const GaussianRational& start, std::uint64_t count) {
    if (count == 0) return GaussianRational{};
    return detail::plain_sum(method, PowerSumQuery{start, q.d * 2, count, q.p, false});
  };
  return part(q.a, (q.t + 1) / 2) - part(q.a + q.d, q.t / 2);
}

}  // namespace apsum
