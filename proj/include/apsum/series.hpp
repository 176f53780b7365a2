#pragma once

/**
 * @file series.hpp
 * @brief Query descriptor, brute-force oracles and independent base cases.
 *
 * Index convention used throughout the library:
 *
 *   | here                 | two-term recurrence form | elimination form   |
 *   |----------------------|--------------------------|--------------------|
 *   | t  (term count)      | n                        | k                  |
 *   | p  (power)           | j (unknown index)        | n - 1              |
 *   | k_max (system size-1)| k                        | k (matrix is k+1)  |
 *
 * A query (a, d, t, p) denotes
 *
 *   L_{p,t}(a,d) = sum_{r=0}^{t-1} (a + r d)^p            (alternating = false)
 *   T_{p,t}(a,d) = sum_{r=0}^{t-1} (-1)^r (a + r d)^p     (alternating = true)
 *
 * and the elimination-based solvers use n = p + 1, k = t.
 */

#include <cstdint>
#include <string>

#include "apsum/error.hpp"
#include "apsum/gaussian.hpp"

namespace apsum {

struct PowerSumQuery {
  GaussianRational a;
  GaussianRational d{1};
  std::uint64_t t = 1;
  std::uint64_t p = 0;
  bool alternating = false;
};

inline void require_terms(const PowerSumQuery& q) {
  if (q.t < 1) throw Error(ErrorCode::InvalidIndex, "term count must be >= 1");
}

/// Solver strategies need a nonzero step; the oracles do not.
inline void require_nonzero_step(const GaussianRational& d) {
  if (d.is_zero()) {
    throw Error(ErrorCode::DegenerateStep, "common difference d must be nonzero");
  }
}

/// Direct summation over `count` terms (count may be zero).
inline GaussianRational progression_power_sum(const GaussianRational& a,
                                              const GaussianRational& d,
                                              std::uint64_t count,
                                              std::uint64_t p) {
  GaussianRational sum;
  for (std::uint64_t r = 0; r < count; ++r) {
    sum += pow_int(a + GaussianRational(r) * d, p);
  }
  return sum;
}

inline GaussianRational oracle_L(const PowerSumQuery& q) {
  require_terms(q);
  GaussianRational sum;
  for (std::uint64_t r = 0; r < q.t; ++r) {
    sum += pow_int(q.a + GaussianRational(r) * q.d, q.p);
  }
  return sum;
}

inline GaussianRational oracle_T(const PowerSumQuery& q) {
  require_terms(q);
  GaussianRational sum;
  for (std::uint64_t r = 0; r < q.t; ++r) {
    const GaussianRational term = pow_int(q.a + GaussianRational(r) * q.d, q.p);
    if (r % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

/// Closed forms for p <= 2:
///   L0 = t
///   L1 = t a + d t(t-1)/2
///   L2 = t a^2 + a d t(t-1) + d^2 (t-1) t (2t-1)/6
inline GaussianRational base_L(const PowerSumQuery& q) {
  require_terms(q);
  const GaussianRational t(q.t);
  switch (q.p) {
    case 0:
      return t;
    case 1:
      return t * q.a + q.d * t * (t - 1) / 2;
    case 2:
      return t * q.a * q.a + q.a * q.d * t * (t - 1) +
             q.d * q.d * (t - 1) * t * (2 * t - 1) / 6;
    default:
      throw Error(ErrorCode::UnsupportedPower,
                  "base_L covers p <= 2, got p = " + std::to_string(q.p));
  }
}

/// Even/odd split: the positive terms are a progression with step 2d starting
/// at a, the negative ones a progression with step 2d starting at a + d.
inline GaussianRational split_T(const PowerSumQuery& q) {
  require_terms(q);
  const GaussianRational two_d = q.d * 2;
  const std::uint64_t even = (q.t + 1) / 2;
  const std::uint64_t odd = q.t / 2;
  return progression_power_sum(q.a, two_d, even, q.p) -
         progression_power_sum(q.a + q.d, two_d, odd, q.p);
}

}  // namespace apsum
