#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals in canonical form.
 *
 * Thin value type over GMP's mpq_class. Every value leaving this type is
 * canonical: denominator positive, gcd(|num|, den) = 1, zero is 0/1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "apsum/error.hpp"

namespace apsum {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value) : q_(BigInt(std::to_string(value))) {}  // NOLINT
  Rational(unsigned int value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT
  Rational(unsigned long value) : q_(value) {}  // NOLINT
  Rational(const BigInt& value) : q_(value) {}  // NOLINT

  Rational(BigInt num, BigInt den) {
    if (den == 0) throw Error(ErrorCode::InvalidScalar, "zero denominator");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
  }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidScalar, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  friend Rational operator-(const Rational& x) {
    Rational r;
    r.q_ = -x.q_;
    return r;
  }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.q_ == y.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& x,
                                          const Rational& y) {
    const int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  Rational abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
  }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  mpq_class q_;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

}  // namespace apsum
