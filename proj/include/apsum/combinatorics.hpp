#pragma once

#include <cstdint>
#include <string>

#include "apsum/error.hpp"
#include "apsum/rational.hpp"

namespace apsum {

/// C(n, j); zero outside 0 <= j <= n.
inline BigInt binomial(std::uint64_t n, std::int64_t j) {
  if (j < 0 || static_cast<std::uint64_t>(j) > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(j));
  return r;
}

/// n (n-1) ... (n-i+1), the product n!/(n-i)!.
inline BigInt falling_factorial(std::uint64_t n, std::uint64_t i) {
  if (i > n) {
    throw Error(ErrorCode::InvalidIndex,
                "falling_factorial(" + std::to_string(n) + ", " +
                    std::to_string(i) + "): i exceeds n");
  }
  BigInt r = 1;
  for (std::uint64_t k = 0; k < i; ++k) r *= static_cast<unsigned long>(n - k);
  return r;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace apsum
