#pragma once

/**
 * @file gaussian.hpp
 * @brief Exact complex scalars over Q(i).
 *
 * A GaussianRational is a pair of canonical Rationals. Equality is exact
 * component-wise equality. The real-only case is common (a, d real), so the
 * ring operations skip the imaginary products when both operands are real.
 */

#include <cstdint>
#include <string>
#include <utility>

#include "apsum/rational.hpp"

namespace apsum {

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(int re) : re_(re) {}  // NOLINT
  GaussianRational(long re) : re_(re) {}  // NOLINT
  GaussianRational(long long re) : re_(re) {}  // NOLINT
  GaussianRational(unsigned int re) : re_(re) {}  // NOLINT
  GaussianRational(unsigned long re) : re_(re) {}  // NOLINT
  GaussianRational(const BigInt& re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_real() const { return im_.is_zero(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |x|^2 = re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      if (!im_.is_zero()) im_ *= o.re_;
      return *this;
    }
    if (is_real()) {
      im_ = re_ * o.im_;
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidScalar, "division by zero");
    if (o.is_real()) {
      re_ /= o.re_;
      if (!im_.is_zero()) im_ /= o.re_;
      return *this;
    }
    const Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational x,
                                    const GaussianRational& y) {
    return x += y;
  }
  friend GaussianRational operator-(GaussianRational x,
                                    const GaussianRational& y) {
    return x -= y;
  }
  friend GaussianRational operator*(GaussianRational x,
                                    const GaussianRational& y) {
    return x *= y;
  }
  friend GaussianRational operator/(GaussianRational x,
                                    const GaussianRational& y) {
    return x /= y;
  }
  friend GaussianRational operator-(const GaussianRational& x) {
    return {-x.re_, -x.im_};
  }

  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;

  GaussianRational inverse() const { return GaussianRational(1) / *this; }

  /// Canonical text: "re", "im i", "re+im i", "re-im i"; a unit imaginary
  /// part renders as a bare "i".
  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    if (im_ == Rational(1)) {
      imag = "i";
    } else if (im_ == Rational(-1)) {
      imag = "-i";
    } else {
      imag = im_.to_string() + "i";
    }
    if (re_.is_zero()) return imag;
    if (imag.front() == '-') return re_.to_string() + imag;
    return re_.to_string() + "+" + imag;
  }

 private:
  Rational re_;
  Rational im_;
};

enum class ArithOp { Add, Sub, Mul, Div, Neg };

/// Dispatching form of the field operations; Neg ignores `y`.
inline GaussianRational gaussian_arith(ArithOp op, const GaussianRational& x,
                                       const GaussianRational& y = {}) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
    case ArithOp::Neg: return -x;
  }
  return x;
}

/// Exact x^e by binary exponentiation; x^0 = 1 for every x, including 0.
inline GaussianRational pow_int(const GaussianRational& x, std::uint64_t e) {
  GaussianRational result(1);
  if (e == 0) return result;
  if (x.is_real()) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), x.re().numerator().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), x.re().denominator().get_mpz_t(), e);
    return GaussianRational(Rational(BigInt(r.get_num()), BigInt(r.get_den())));
  }
  GaussianRational base = x;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace apsum
