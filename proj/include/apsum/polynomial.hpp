#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate polynomials over Q(i) in the term-count variable t.
 *
 * Coefficients are stored in ascending degree. The zero polynomial is the
 * empty coefficient list; otherwise the last coefficient is nonzero.
 */

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "apsum/combinatorics.hpp"
#include "apsum/gaussian.hpp"

namespace apsum {

class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<GaussianRational> coefficients)
      : c_(std::move(coefficients)) {
    trim();
  }
  explicit UniPolynomial(const GaussianRational& constant)
      : UniPolynomial(std::vector<GaussianRational>{constant}) {}

  /// The monomial t.
  static UniPolynomial t() {
    return UniPolynomial(std::vector<GaussianRational>{0, 1});
  }

  const std::vector<GaussianRational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  GaussianRational coefficient(std::size_t k) const {
    return k < c_.size() ? c_[k] : GaussianRational{};
  }
  GaussianRational leading() const {
    return c_.empty() ? GaussianRational{} : c_.back();
  }

  UniPolynomial& operator+=(const UniPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPolynomial& operator-=(const UniPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  UniPolynomial& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  UniPolynomial& operator/=(const GaussianRational& s) {
    if (s.is_zero()) throw Error(ErrorCode::InvalidScalar, "division by zero");
    for (auto& x : c_) x /= s;
    return *this;
  }

  friend UniPolynomial operator+(UniPolynomial p, const UniPolynomial& q) {
    return p += q;
  }
  friend UniPolynomial operator-(UniPolynomial p, const UniPolynomial& q) {
    return p -= q;
  }
  friend UniPolynomial operator-(UniPolynomial p) {
    for (auto& x : p.c_) x = -x;
    return p;
  }
  friend UniPolynomial operator*(UniPolynomial p, const GaussianRational& s) {
    return p *= s;
  }
  friend UniPolynomial operator*(const GaussianRational& s, UniPolynomial p) {
    return p *= s;
  }
  friend UniPolynomial operator/(UniPolynomial p, const GaussianRational& s) {
    return p /= s;
  }
  friend UniPolynomial operator*(const UniPolynomial& p,
                                 const UniPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<GaussianRational> r(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (p.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    }
    return UniPolynomial(std::move(r));
  }

  friend bool operator==(const UniPolynomial&, const UniPolynomial&) = default;

  /// Horner evaluation; exact.
  GaussianRational operator()(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<GaussianRational> c_;
};

inline UniPolynomial poly_add(const UniPolynomial& p, const UniPolynomial& q) {
  return p + q;
}
inline UniPolynomial poly_scale(const UniPolynomial& p,
                                const GaussianRational& s) {
  return p * s;
}
inline UniPolynomial poly_mul(const UniPolynomial& p, const UniPolynomial& q) {
  return p * q;
}

/// P(t + c), by binomial expansion of each monomial.
inline UniPolynomial poly_shift_compose(const UniPolynomial& p,
                                        const GaussianRational& c) {
  const auto& coeffs = p.coefficients();
  std::vector<GaussianRational> out(coeffs.size());
  std::vector<GaussianRational> c_pow{1};
  for (std::size_t k = 1; k < coeffs.size(); ++k) c_pow.push_back(c_pow.back() * c);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      out[j] += coeffs[k] * GaussianRational(binomial(k, static_cast<long>(j))) *
                c_pow[k - j];
    }
  }
  return UniPolynomial(std::move(out));
}

inline GaussianRational poly_eval(const UniPolynomial& p,
                                  const GaussianRational& x) {
  return p(x);
}

}  // namespace apsum
