#pragma once

/**
 * @file text.hpp
 * @brief Canonical text interchange for scalars and polynomials.
 *
 * Scalar grammar (whitespace-free):
 *
 *   scalar := rat | rat SIGN [rat] 'i' | [SIGN] [rat] 'i'
 *   rat    := [SIGN] digits ['/' digits]
 *
 * A bare "i" stands for a unit imaginary part, so "1+i" and "1+1i" parse to
 * the same value; rendering always produces the short form.
 */

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "apsum/gaussian.hpp"
#include "apsum/polynomial.hpp"

namespace apsum {

inline std::string render(const Rational& x) { return x.to_string(); }
inline std::string render(const GaussianRational& x) { return x.to_string(); }

namespace detail {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  GaussianRational parse() {
    if (s_.empty()) fail("empty scalar");
    const int first_sign = sign();
    if (peek() == 'i') {
      ++pos_;
      expect_end();
      return {Rational(0), Rational(first_sign)};
    }
    Rational first = unsigned_rat() * Rational(first_sign);
    if (at_end()) return GaussianRational(first);
    if (peek() == 'i') {
      ++pos_;
      expect_end();
      return {Rational(0), first};
    }
    if (peek() != '+' && peek() != '-') fail("expected sign, 'i' or end");
    const int second_sign = sign();
    Rational second(1);
    if (peek() != 'i') second = unsigned_rat();
    if (peek() != 'i') fail("expected 'i'");
    ++pos_;
    expect_end();
    return {first, second * Rational(second_sign)};
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at position " + std::to_string(pos_) + " in \"" +
                    std::string(s_) + "\"",
                pos_);
  }

  void expect_end() const {
    if (!at_end()) fail("trailing characters");
  }

  int sign() {
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    return 1;
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  Rational unsigned_rat() {
    BigInt num = digits();
    if (peek() != '/') return Rational(num);
    ++pos_;
    const std::size_t den_pos = pos_;
    BigInt den = digits();
    if (den == 0) {
      throw Error(ErrorCode::InvalidScalar,
                  "zero denominator at position " + std::to_string(den_pos),
                  den_pos);
    }
    return Rational(num, den);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GaussianRational parse_scalar(std::string_view s) {
  return detail::ScalarParser(s).parse();
}

enum class PolyStyle { Text, Latex };

namespace detail {

inline std::string latex_rational(const Rational& x) {
  const std::string sign = x.sign() < 0 ? "-" : "";
  const Rational m = x.abs();
  if (m.is_integer()) return sign + m.to_string();
  return sign + "\\frac{" + m.numerator().get_str() + "}{" +
         m.denominator().get_str() + "}";
}

inline std::string latex_scalar(const GaussianRational& x) {
  if (x.is_real()) return latex_rational(x.re());
  std::string imag;
  if (x.im() == Rational(1)) {
    imag = "i";
  } else if (x.im() == Rational(-1)) {
    imag = "-i";
  } else {
    imag = latex_rational(x.im()) + "i";
  }
  if (x.re().is_zero()) return imag;
  return latex_rational(x.re()) + (imag.front() == '-' ? "" : "+") + imag;
}

}  // namespace detail

/// "c0 + c1*t + c2*t^2 + ...", zero terms omitted, unit coefficients
/// dropped, negative real coefficients pulled into the joining sign and
/// genuinely complex coefficients parenthesized. The zero polynomial is "0".
inline std::string render(const UniPolynomial& p,
                          PolyStyle style = PolyStyle::Text) {
  const auto& c = p.coefficients();
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    GaussianRational coeff = c[k];
    bool negative = false;
    if (coeff.is_real() && coeff.re().sign() < 0) {
      negative = true;
      coeff = -coeff;
    }
    std::string scalar = style == PolyStyle::Latex ? detail::latex_scalar(coeff)
                                                   : coeff.to_string();
    if (!coeff.is_real() && !coeff.re().is_zero()) {
      scalar = style == PolyStyle::Latex ? "\\left(" + scalar + "\\right)"
                                         : "(" + scalar + ")";
    }
    std::string monomial;
    if (k >= 1) {
      monomial = "t";
      if (k >= 2) {
        monomial += style == PolyStyle::Latex ? "^{" + std::to_string(k) + "}"
                                              : "^" + std::to_string(k);
      }
    }
    std::string term;
    if (monomial.empty()) {
      term = scalar;
    } else if (coeff == GaussianRational(1)) {
      term = monomial;
    } else {
      term = scalar + (style == PolyStyle::Latex ? " " : "*") + monomial;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace apsum
