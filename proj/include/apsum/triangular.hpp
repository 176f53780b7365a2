#pragma once

/**
 * @file triangular.hpp
 * @brief Lower-triangular power-sum systems, forward substitution and the
 *        determinants behind Cramer's rule.
 *
 * Row k (k = 0..k_max) of the plain system telescopes
 * (a + (r+1)d)^{k+1} - (a + rd)^{k+1} over r = 0..t-1:
 *
 *   sum_{j<=k} C(k+1, j) d^{k+1-j} L_j = (a + t d)^{k+1} - a^{k+1}
 *
 * The alternating system is built verbatim from the published two-term
 * recurrence for T_j: coefficients carry (-1)^j and the right-hand side is
 * (-1)^k [(a + t d - d)^{k+1} - (a - d)^{k+1}]. Whether that system really
 * has the alternating sums as its solution is measured by the audit, not
 * assumed here.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "apsum/combinatorics.hpp"
#include "apsum/gaussian.hpp"
#include "apsum/polynomial.hpp"
#include "apsum/series.hpp"

namespace apsum {

enum class SystemKind { L, T };

inline constexpr std::uint64_t kCramerMaxKMax = 10;

template <class Value>
class LowerTriangularSystem {
 public:
  LowerTriangularSystem(SystemKind kind, std::vector<std::vector<GaussianRational>> rows,
                        std::vector<Value> rhs)
      : kind_(kind), rows_(std::move(rows)), rhs_(std::move(rhs)) {
    if (rows_.size() != rhs_.size()) {
      throw Error(ErrorCode::InvalidIndex, "row count and rhs length differ");
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k].size() != k + 1) {
        throw Error(ErrorCode::InvalidIndex,
                    "row " + std::to_string(k) + " must hold k+1 coefficients");
      }
    }
  }

  SystemKind kind() const { return kind_; }
  std::size_t size() const { return rows_.size(); }

  /// Zero above the diagonal.
  GaussianRational coeff(std::size_t row, std::size_t col) const {
    if (row >= rows_.size() || col >= rows_.size()) {
      throw Error(ErrorCode::InvalidIndex, "coefficient index out of range");
    }
    return col > row ? GaussianRational{} : rows_[row][col];
  }
  const std::vector<GaussianRational>& row(std::size_t k) const { return rows_[k]; }
  const Value& rhs(std::size_t k) const { return rhs_[k]; }
  const std::vector<Value>& rhs() const { return rhs_; }

 private:
  SystemKind kind_;
  std::vector<std::vector<GaussianRational>> rows_;
  std::vector<Value> rhs_;
};

using TriangularSystem = LowerTriangularSystem<GaussianRational>;
using SymbolicSystem = LowerTriangularSystem<UniPolynomial>;

namespace detail {

/// d^0 .. d^n
inline std::vector<GaussianRational> powers(const GaussianRational& x, std::size_t n) {
  std::vector<GaussianRational> out;
  out.reserve(n + 1);
  out.emplace_back(1);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(out.back() * x);
  return out;
}

inline std::vector<GaussianRational> coefficient_row(SystemKind kind, std::size_t k,
                                                     const std::vector<GaussianRational>& d_pow) {
  std::vector<GaussianRational> row;
  row.reserve(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    GaussianRational c = GaussianRational(binomial(k + 1, static_cast<long>(j))) * d_pow[k + 1 - j];
    if (kind == SystemKind::T && j % 2 == 1) c = -c;
    row.push_back(std::move(c));
  }
  return row;
}

inline GaussianRational rhs_value(SystemKind kind, std::size_t k, const PowerSumQuery& q) {
  const GaussianRational t(q.t);
  if (kind == SystemKind::L) {
    return pow_int(q.a + t * q.d, k + 1) - pow_int(q.a, k + 1);
  }
  GaussianRational v = pow_int(q.a + t * q.d - q.d, k + 1) - pow_int(q.a - q.d, k + 1);
  return k % 2 == 1 ? -v : v;
}

}  // namespace detail

inline TriangularSystem build_system(SystemKind kind, std::uint64_t k_max,
                                     const PowerSumQuery& q) {
  require_terms(q);
  require_nonzero_step(q.d);
  const auto d_pow = detail::powers(q.d, k_max + 1);
  std::vector<std::vector<GaussianRational>> rows;
  std::vector<GaussianRational> rhs;
  rows.reserve(k_max + 1);
  rhs.reserve(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    rows.push_back(detail::coefficient_row(kind, k, d_pow));
    rhs.push_back(detail::rhs_value(kind, k, q));
  }
  return {kind, std::move(rows), std::move(rhs)};
}

/// Solves row by row; the division is always by the scalar diagonal, so the
/// same routine serves numeric values and polynomials in t.
template <class Value>
std::vector<Value> forward_substitute(const LowerTriangularSystem<Value>& sys) {
  std::vector<Value> x;
  x.reserve(sys.size());
  for (std::size_t k = 0; k < sys.size(); ++k) {
    const auto& row = sys.row(k);
    if (row[k].is_zero()) {
      throw Error(ErrorCode::SingularSystem,
                  "zero diagonal entry in row " + std::to_string(k));
    }
    Value acc = sys.rhs(k);
    for (std::size_t j = 0; j < k; ++j) {
      if (row[j].is_zero()) continue;
      acc -= row[j] * x[j];
    }
    acc /= row[k];
    x.push_back(std::move(acc));
  }
  return x;
}

/// coeff * values - rhs, one entry per row.
inline std::vector<GaussianRational> row_residuals(const TriangularSystem& sys,
                                                   const std::vector<GaussianRational>& values) {
  if (values.size() != sys.size()) {
    throw Error(ErrorCode::InvalidIndex, "value vector length differs from system size");
  }
  std::vector<GaussianRational> out;
  out.reserve(sys.size());
  for (std::size_t k = 0; k < sys.size(); ++k) {
    GaussianRational lhs;
    for (std::size_t j = 0; j <= k; ++j) lhs += sys.row(k)[j] * values[j];
    out.push_back(lhs - sys.rhs(k));
  }
  return out;
}

/// Literal product of the diagonal.
template <class Value>
GaussianRational determinant(const LowerTriangularSystem<Value>& sys) {
  GaussianRational det(1);
  for (std::size_t k = 0; k < sys.size(); ++k) det *= sys.row(k)[k];
  return det;
}

/// Forward substitution that regenerates each coefficient row on the fly
/// instead of materializing the system: O(k_max) memory, same arithmetic as
/// forward_substitute(build_system(kind, k_max, q)).
inline std::vector<GaussianRational> solve_power_sums(SystemKind kind, std::uint64_t k_max,
                                                      const PowerSumQuery& q) {
  require_terms(q);
  require_nonzero_step(q.d);
  const auto d_pow = detail::powers(q.d, k_max + 1);
  const bool unit_step = q.d == GaussianRational(1);
  std::vector<GaussianRational> x;
  x.reserve(k_max + 1);
  std::vector<BigInt> binom_row{1};  // C(k+1, 0..k+1), updated by Pascal's rule
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::vector<BigInt> next(k + 2);
    next[0] = 1;
    next[k + 1] = 1;
    for (std::size_t j = 1; j <= k; ++j) next[j] = binom_row[j - 1] + binom_row[j];
    binom_row = std::move(next);

    GaussianRational acc = detail::rhs_value(kind, k, q);
    for (std::size_t j = 0; j < k; ++j) {
      GaussianRational term = x[j] * GaussianRational(binom_row[j]);
      if (!unit_step) term *= d_pow[k + 1 - j];
      if (kind == SystemKind::T && j % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    GaussianRational diag = GaussianRational(binom_row[k]) * d_pow[1];
    if (kind == SystemKind::T && k % 2 == 1) diag = -diag;
    acc /= diag;
    x.push_back(std::move(acc));
  }
  return x;
}

namespace detail {

/// Laplace expansion along successive rows, memoized on the set of columns
/// still available. Exponential in n; callers cap n.
inline GaussianRational cofactor_determinant(const std::vector<std::vector<GaussianRational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return GaussianRational(1);
  std::unordered_map<std::uint32_t, GaussianRational> memo;
  const auto rec = [&](auto&& self, std::size_t row, std::uint32_t cols) -> GaussianRational {
    if (row == n) return GaussianRational(1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    GaussianRational det;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      if (!m[row][c].is_zero()) {
        GaussianRational minor = self(self, row + 1, cols & ~(1u << c));
        if (sign > 0) {
          det += m[row][c] * minor;
        } else {
          det -= m[row][c] * minor;
        }
      }
      sign = -sign;
    }
    memo.emplace(cols, det);
    return det;
  };
  return rec(rec, 0, (n >= 32 ? 0xFFFFFFFFu : ((1u << n) - 1u)));
}

}  // namespace detail

/// Determinant of the plain coefficient matrix with its last column replaced
/// by the right-hand side, by cofactor expansion. Dividing by the system
/// determinant gives L_{k_max}.
inline GaussianRational cramer_numerator(std::uint64_t k_max, const PowerSumQuery& q) {
  if (k_max > kCramerMaxKMax) {
    throw Error(ErrorCode::SizeLimit, "cramer_numerator is capped at k_max = " +
                                          std::to_string(kCramerMaxKMax));
  }
  const TriangularSystem sys = build_system(SystemKind::L, k_max, q);
  const std::size_t n = sys.size();
  std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c + 1 < n; ++c) m[r][c] = sys.coeff(r, c);
    m[r][n - 1] = sys.rhs(r);
  }
  return detail::cofactor_determinant(m);
}

/// Plain system with t left symbolic: row k's right-hand side is
/// sum_{i=1}^{k+1} C(k+1, i) a^{k+1-i} d^i t^i.
inline SymbolicSystem build_symbolic_system(std::uint64_t k_max, const GaussianRational& a,
                                            const GaussianRational& d) {
  require_nonzero_step(d);
  const auto d_pow = detail::powers(d, k_max + 1);
  const auto a_pow = detail::powers(a, k_max + 1);
  std::vector<std::vector<GaussianRational>> rows;
  std::vector<UniPolynomial> rhs;
  for (std::size_t k = 0; k <= k_max; ++k) {
    rows.push_back(detail::coefficient_row(SystemKind::L, k, d_pow));
    std::vector<GaussianRational> c(k + 2);
    for (std::size_t i = 1; i <= k + 1; ++i) {
      c[i] = GaussianRational(binomial(k + 1, static_cast<long>(i))) * a_pow[k + 1 - i] * d_pow[i];
    }
    rhs.emplace_back(std::move(c));
  }
  return {SystemKind::L, std::move(rows), std::move(rhs)};
}

/// P_0..P_{k_max}, with P_j(t) = L_{j,t}(a, d) for every positive integer t.
inline std::vector<UniPolynomial> solve_symbolic(std::uint64_t k_max, const GaussianRational& a,
                                                 const GaussianRational& d) {
  return forward_substitute(build_symbolic_system(k_max, a, d));
}

}  // namespace apsum
