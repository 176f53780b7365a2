#pragma once

/**
 * @file elimination.hpp
 * @brief Row-reduction intermediates S^m_j and the closed forms built on them.
 *
 * Augment the plain (k+1)x(k+1) system with its right-hand side column
 * J^r = (a + t d)^r - a^r. Eliminating column 0 with row 1 and column 1 with
 * row 2 leaves, in row j >= 3, the base value
 *
 *   S_j = (j/2) d^{j-1} J - (j/2) d^{j-2} J^2 - d^{j-1} J + J^j
 *       = (j/2 - 1) t d^j - (j/2) d^{j-2} ((a + t d)^2 - a^2) + (a + t d)^j - a^j
 *
 * Round m >= 1 pivots on row m+2 (diagonal (m+2) d) and updates every row
 * below it:
 *
 *   S(m, j) = -C(j, m+1) / (m+2) * d^{j-m-2} * S(m-1, m+2) + S(m-1, j)
 *
 * After the last round, row n holds n d L_{n-1} = S(n-3, n).
 *
 * The closed_form_* evaluators transcribe the published closed forms
 * verbatim. They are NOT ground truth: they return whatever the printed
 * formula yields and leave the comparison to the audit.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apsum/combinatorics.hpp"
#include "apsum/gaussian.hpp"
#include "apsum/series.hpp"
#include "apsum/triangular.hpp"

namespace apsum {

/// S_j from the J^r differences.
inline GaussianRational s_base_j_form(std::uint64_t j, const PowerSumQuery& q) {
  if (j < 3) {
    throw Error(ErrorCode::UnsupportedPower,
                "base entries start at j = 3 (d^{j-2} needs j >= 2 and the "
                "pivot chain starts at row 3); got j = " + std::to_string(j));
  }
  require_nonzero_step(q.d);
  const GaussianRational end = q.a + GaussianRational(q.t) * q.d;
  const auto diff = [&](std::uint64_t r) { return pow_int(end, r) - pow_int(q.a, r); };
  const GaussianRational J1 = diff(1);
  const GaussianRational J2 = diff(2);
  const GaussianRational half_j = GaussianRational(Rational(BigInt(j), BigInt(2)));
  const GaussianRational d_j1 = pow_int(q.d, j - 1);
  const GaussianRational d_j2 = pow_int(q.d, j - 2);
  return half_j * d_j1 * J1 - half_j * d_j2 * J2 - d_j1 * J1 + diff(j);
}

/// S_j in the expanded form with the term count t explicit.
inline GaussianRational s_base_expanded(std::uint64_t j, const PowerSumQuery& q) {
  if (j < 3) {
    throw Error(ErrorCode::UnsupportedPower,
                "base entries start at j = 3; got j = " + std::to_string(j));
  }
  require_nonzero_step(q.d);
  const GaussianRational t(q.t);
  const GaussianRational end = q.a + t * q.d;
  const GaussianRational half_j = GaussianRational(Rational(BigInt(j), BigInt(2)));
  return (half_j - 1) * t * pow_int(q.d, j) -
         half_j * pow_int(q.d, j - 2) * (end * end - q.a * q.a) + pow_int(end, j) -
         pow_int(q.a, j);
}

/// S_j, evaluated both ways; the two must agree exactly.
inline GaussianRational s_base(std::uint64_t j, const PowerSumQuery& q) {
  GaussianRational from_j = s_base_j_form(j, q);
  if (from_j != s_base_expanded(j, q)) {
    throw Error(ErrorCode::PaperFormMismatch,
                "S_" + std::to_string(j) + " forms disagree");
  }
  return from_j;
}

namespace detail {

/// -C(j, m+1)/(m+2) * d^{j-m-2} * pivot + previous
inline GaussianRational elimination_step(std::uint64_t m, std::uint64_t j,
                                         const GaussianRational& pivot,
                                         const GaussianRational& previous,
                                         const std::vector<GaussianRational>& d_pow) {
  const GaussianRational factor(
      Rational(binomial(j, static_cast<long>(m + 1)), BigInt(static_cast<unsigned long>(m + 2))));
  return previous - factor * d_pow[j - m - 2] * pivot;
}

}  // namespace detail

class STable {
 public:
  STable(std::uint64_t n_max, const PowerSumQuery& q) : n_max_(n_max), q_(q) {
    require_nonzero_step(q.d);
    if (n_max < 3) {
      throw Error(ErrorCode::UnsupportedPower, "S-table needs n_max >= 3");
    }
    d_pow_ = detail::powers(q.d, n_max);
    rows_.resize(n_max - 2);
    for (std::uint64_t j = 3; j <= n_max; ++j) rows_[0].push_back(s_base(j, q));
    for (std::uint64_t m = 1; m + 3 <= n_max; ++m) {
      const GaussianRational pivot = at(m - 1, m + 2);
      auto& row = rows_[m];
      row.reserve(n_max - m - 1);
      row.push_back(pivot);  // row m+2 is untouched by its own round
      for (std::uint64_t j = m + 3; j <= n_max; ++j) {
        row.push_back(detail::elimination_step(m, j, pivot, at(m - 1, j), d_pow_));
      }
    }
  }

  std::uint64_t n_max() const { return n_max_; }
  const PowerSumQuery& query() const { return q_; }

  static std::uint64_t first_column(std::uint64_t m) { return m == 0 ? 3 : m + 2; }

  bool contains(std::uint64_t m, std::uint64_t j) const {
    return m + 3 <= n_max_ && j >= first_column(m) && j <= n_max_;
  }

  const GaussianRational& at(std::uint64_t m, std::uint64_t j) const {
    if (!contains(m, j)) {
      throw Error(ErrorCode::InvalidIndex, "S(" + std::to_string(m) + ", " + std::to_string(j) +
                                               ") outside table with n_max = " +
                                               std::to_string(n_max_));
    }
    return rows_[m][j - first_column(m)];
  }

  /// Re-applies the recurrence to every stored entry with m >= 1; returns the
  /// (m, j) pairs that fail.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> recheck() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> bad;
    for (std::uint64_t m = 1; m + 3 <= n_max_; ++m) {
      const GaussianRational& pivot = at(m - 1, m + 2);
      if (at(m, m + 2) != pivot) bad.emplace_back(m, m + 2);
      for (std::uint64_t j = m + 3; j <= n_max_; ++j) {
        if (at(m, j) != detail::elimination_step(m, j, pivot, at(m - 1, j), d_pow_)) {
          bad.emplace_back(m, j);
        }
      }
    }
    return bad;
  }

 private:
  std::uint64_t n_max_;
  PowerSumQuery q_;
  std::vector<GaussianRational> d_pow_;
  std::vector<std::vector<GaussianRational>> rows_;
};

inline STable s_table(std::uint64_t n_max, const PowerSumQuery& q) { return STable(n_max, q); }

inline void require_elimination_power(const PowerSumQuery& q) {
  if (q.p < 2) {
    throw Error(ErrorCode::UnsupportedPower,
                "elimination and closed-form paths need p >= 2; use base_L for p = " +
                    std::to_string(q.p));
  }
}

/// L_p = S(n-3, n) / (n d) with n = p + 1. Runs the same rounds as STable but
/// keeps one row in place, so memory stays linear in p.
inline GaussianRational L_via_elimination(const PowerSumQuery& q) {
  require_terms(q);
  require_elimination_power(q);
  require_nonzero_step(q.d);
  const std::uint64_t n = q.p + 1;
  const auto d_pow = detail::powers(q.d, n);
  std::vector<GaussianRational> s(n + 1);
  for (std::uint64_t j = 3; j <= n; ++j) s[j] = s_base(j, q);
  for (std::uint64_t m = 1; m + 3 <= n; ++m) {
    const GaussianRational pivot = s[m + 2];
    for (std::uint64_t j = m + 3; j <= n; ++j) {
      s[j] = detail::elimination_step(m, j, pivot, s[j], d_pow);
    }
  }
  return s[n] / (GaussianRational(n) * q.d);
}

/// Right side of the general-m expansion of S(n-3, n):
///   sum_{i=0}^{m} C(m,i) (d/2)^i n!/(n-i)! (-1)^i S(n-3-m, n-i)
inline GaussianRational theorem5_rhs(std::uint64_t n, std::uint64_t m, const STable& table) {
  if (n < 4 || m + 3 > n) {
    throw Error(ErrorCode::InvalidIndex, "expansion needs n >= 4 and 0 <= m <= n-3; got n = " +
                                             std::to_string(n) + ", m = " + std::to_string(m));
  }
  const GaussianRational half_d = table.query().d / 2;
  GaussianRational sum;
  GaussianRational half_d_pow(1);
  for (std::uint64_t i = 0; i <= m; ++i) {
    GaussianRational term = GaussianRational(binomial(m, static_cast<long>(i))) * half_d_pow *
                            GaussianRational(falling_factorial(n, i)) *
                            table.at(n - 3 - m, n - i);
    if (i % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    half_d_pow *= half_d;
  }
  return sum;
}

/// Expansion right side minus S(n-3, n); zero when the expansion holds.
inline GaussianRational theorem5_residual(std::uint64_t n, std::uint64_t m, const STable& table) {
  return theorem5_rhs(n, m, table) - table.at(n - 3, n);
}

inline GaussianRational theorem5_residual(std::uint64_t n, std::uint64_t m,
                                          const PowerSumQuery& q) {
  if (n < 4 || m + 3 > n) {
    throw Error(ErrorCode::InvalidIndex, "expansion needs n >= 4 and 0 <= m <= n-3; got n = " +
                                             std::to_string(n) + ", m = " + std::to_string(m));
  }
  return theorem5_residual(n, m, STable(n, q));
}

/// k! d^k S(k-2, k+1): the published value of the Cramer numerator.
inline GaussianRational determinant_bridge_value(std::uint64_t k, const PowerSumQuery& q) {
  if (k < 2) throw Error(ErrorCode::InvalidIndex, "bridge needs k >= 2");
  const STable table(k + 1, q);
  return GaussianRational(factorial(k)) * pow_int(q.d, k) * table.at(k - 2, k + 1);
}

/// Published closed form for L_p at m = n - 3, evaluated verbatim:
///   (1/(n d)) sum_{i=0}^{n-3} C(n-3,i) (d/2)^i n!/(n-i)! (-1)^i S_{n-i}
inline GaussianRational closed_form_L(const PowerSumQuery& q) {
  require_terms(q);
  require_elimination_power(q);
  require_nonzero_step(q.d);
  const std::uint64_t n = q.p + 1;
  const GaussianRational half_d = q.d / 2;
  GaussianRational sum;
  GaussianRational half_d_pow(1);
  for (std::uint64_t i = 0; i + 3 <= n; ++i) {
    GaussianRational term = GaussianRational(binomial(n - 3, static_cast<long>(i))) * half_d_pow *
                            GaussianRational(falling_factorial(n, i)) * s_base(n - i, q);
    if (i % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    half_d_pow *= half_d;
  }
  return sum / (GaussianRational(n) * q.d);
}

/// The same closed form in its factorial-normalized presentation
///   d/((n-1)!(n-3)!) L = sum_{i=0}^{n-3} (d/2)^i (-1)^i S_{n-i} / (i!(n-i)!(n-3-i)!)
/// solved for L.
inline GaussianRational closed_form_L_normalized(const PowerSumQuery& q) {
  require_terms(q);
  require_elimination_power(q);
  require_nonzero_step(q.d);
  const std::uint64_t n = q.p + 1;
  const GaussianRational half_d = q.d / 2;
  GaussianRational sum;
  GaussianRational half_d_pow(1);
  for (std::uint64_t i = 0; i + 3 <= n; ++i) {
    const BigInt denom = factorial(i) * factorial(n - i) * factorial(n - 3 - i);
    GaussianRational term = half_d_pow * s_base(n - i, q) / GaussianRational(denom);
    if (i % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    half_d_pow *= half_d;
  }
  return sum * GaussianRational(factorial(n - 1) * factorial(n - 3)) / q.d;
}

/// Base value used by the alternating closed form, verbatim:
///   (j/2 - 1) t d^j + (j/2) d^{j-2} ((a+td-d)^2 - (a-d)^2)
///     + (-1)^{j-1} [(a+td-d)^j - (a-d)^j]
inline GaussianRational s_base_alternating(std::uint64_t j, const PowerSumQuery& q) {
  if (j < 3) {
    throw Error(ErrorCode::UnsupportedPower,
                "base entries start at j = 3; got j = " + std::to_string(j));
  }
  require_nonzero_step(q.d);
  const GaussianRational t(q.t);
  const GaussianRational hi = q.a + t * q.d - q.d;
  const GaussianRational lo = q.a - q.d;
  const GaussianRational half_j = GaussianRational(Rational(BigInt(j), BigInt(2)));
  GaussianRational tail = pow_int(hi, j) - pow_int(lo, j);
  if (j % 2 == 0) tail = -tail;  // (-1)^{j-1}
  return (half_j - 1) * t * pow_int(q.d, j) + half_j * pow_int(q.d, j - 2) * (hi * hi - lo * lo) +
         tail;
}

/// Published closed form for the alternating sum at m = n - 3, verbatim:
///   (1/(n d)) sum_{i=0}^{n-3} C(n-3,i) (d/2)^i n!/(n-i)! (-1)^{i+1} S'_{n-i}
inline GaussianRational closed_form_T(const PowerSumQuery& q) {
  require_terms(q);
  require_elimination_power(q);
  require_nonzero_step(q.d);
  const std::uint64_t n = q.p + 1;
  const GaussianRational half_d = q.d / 2;
  GaussianRational sum;
  GaussianRational half_d_pow(1);
  for (std::uint64_t i = 0; i + 3 <= n; ++i) {
    GaussianRational term = GaussianRational(binomial(n - 3, static_cast<long>(i))) * half_d_pow *
                            GaussianRational(falling_factorial(n, i)) *
                            s_base_alternating(n - i, q);
    if (i % 2 == 0) {  // (-1)^{i+1}
      sum -= term;
    } else {
      sum += term;
    }
    half_d_pow *= half_d;
  }
  return sum / (GaussianRational(n) * q.d);
}

}  // namespace apsum
