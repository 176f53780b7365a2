#include <gtest/gtest.h>

#include "apsum/combinatorics.hpp"
#include "apsum/gaussian.hpp"
#include "apsum/polynomial.hpp"
#include "apsum/text.hpp"
#include "support/oracles.hpp"

using namespace apsum;
using apsum::testing::ScalarGen;

namespace {

GaussianRational g(const char* s) { return parse_scalar(s); }

bool canonical(const Rational& r) {
  const BigInt den = r.denominator();
  BigInt gcd;
  mpz_gcd(gcd.get_mpz_t(), r.numerator().get_mpz_t(), den.get_mpz_t());
  return den > 0 && (r.is_zero() ? den == 1 : gcd == 1);
}

}  // namespace

TEST(Rational, MakeRationalReduces) {
  EXPECT_EQ(make_rational(6, 4).to_string(), "3/2");
  EXPECT_EQ(make_rational(0, 7).to_string(), "0");
  EXPECT_EQ(make_rational(0, 7).denominator(), 1);
  EXPECT_EQ(make_rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(make_rational(3, -6).denominator(), 2);
}

TEST(Rational, ZeroDenominatorIsInvalidScalar) {
  try {
    make_rational(1, 0);
    FAIL() << "expected InvalidScalar";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidScalar);
  }
}

TEST(Gaussian, FieldOperations) {
  EXPECT_EQ(gaussian_arith(ArithOp::Add, g("1/2"), g("1/3")), g("5/6"));
  EXPECT_EQ(gaussian_arith(ArithOp::Mul, g("1+i"), g("1-i")), g("2"));
  EXPECT_EQ(gaussian_arith(ArithOp::Sub, g("1+i"), g("i")), g("1"));
  EXPECT_EQ(gaussian_arith(ArithOp::Neg, g("1-2i")), g("-1+2i"));
  EXPECT_EQ(gaussian_arith(ArithOp::Div, g("2"), g("1+i")), g("1-i"));
}

TEST(Gaussian, DivisionByZeroIsInvalidScalar) {
  try {
    gaussian_arith(ArithOp::Div, g("1"), g("0"));
    FAIL() << "expected InvalidScalar";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidScalar);
  }
}

TEST(Gaussian, PowInt) {
  EXPECT_EQ(pow_int(g("1+i"), 2), g("2i"));
  EXPECT_EQ(pow_int(g("3/2"), 3), g("27/8"));
  EXPECT_EQ(pow_int(g("0"), 0), g("1"));
  EXPECT_EQ(pow_int(g("5-7/3i"), 0), g("1"));
  EXPECT_EQ(pow_int(g("i"), 3), g("-i"));
  EXPECT_EQ(pow_int(g("-2/3"), 5), g("-32/243"));
}

TEST(Gaussian, FieldAxiomsOnRandomInputs) {
  ScalarGen gen(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = gen.gaussian(), y = gen.gaussian(), z = gen.gaussian();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x - x, GaussianRational{});
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), GaussianRational(1));
    }
    for (const auto& v : {x * y, x + z, x - y}) {
      EXPECT_TRUE(canonical(v.re()));
      EXPECT_TRUE(canonical(v.im()));
    }
    if (!y.is_zero()) {
      const auto q = x / y;
      EXPECT_TRUE(canonical(q.re()) && canonical(q.im()));
    }
  }
}

TEST(Gaussian, PowerLawsOnRandomInputs) {
  ScalarGen gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = gen.gaussian();
    const auto e1 = static_cast<unsigned>(gen.integer(0, 32));
    const auto e2 = static_cast<unsigned>(gen.integer(0, 32));
    EXPECT_EQ(pow_int(x, e1 + e2), pow_int(x, e1) * pow_int(x, e2));
    EXPECT_EQ(pow_int(x, e1), apsum::testing::naive_pow(x, e1));
  }
}

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Combinatorics, PascalRule) {
  for (unsigned n = 1; n <= 40; ++n) {
    for (long j = 0; j <= static_cast<long>(n); ++j) {
      EXPECT_EQ(binomial(n, j), binomial(n - 1, j - 1) + binomial(n - 1, j)) << n << "," << j;
    }
  }
}

TEST(Combinatorics, FallingFactorial) {
  EXPECT_EQ(falling_factorial(5, 2), 20);
  EXPECT_EQ(falling_factorial(9, 0), 1);
  EXPECT_EQ(falling_factorial(4, 4), 24);
  try {
    falling_factorial(3, 4);
    FAIL() << "expected InvalidIndex";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidIndex);
  }
}

TEST(Polynomial, Operations) {
  const UniPolynomial t = UniPolynomial::t();
  const UniPolynomial one(GaussianRational(1));
  EXPECT_EQ(poly_add(t, one).coefficients(), (std::vector<GaussianRational>{1, 1}));
  EXPECT_EQ(poly_mul(t, t).coefficients(), (std::vector<GaussianRational>{0, 0, 1}));
  EXPECT_EQ(poly_scale(UniPolynomial(std::vector<GaussianRational>{2, 4}), g("1/2")).coefficients(),
            (std::vector<GaussianRational>{1, 2}));
  // (t + 1)^2 shifted by -1 is t^2.
  const UniPolynomial sq = poly_mul(t + one, t + one);
  EXPECT_EQ(poly_shift_compose(sq, g("-1")), poly_mul(t, t));
}

TEST(Polynomial, TrimsToZero) {
  const UniPolynomial p(std::vector<GaussianRational>{1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(Polynomial, Evaluation) {
  const UniPolynomial t = UniPolynomial::t();
  EXPECT_EQ(poly_eval(t * t, 3), g("9"));
  EXPECT_EQ(poly_eval(UniPolynomial{}, g("3+i")), g("0"));
  const UniPolynomial triangle(std::vector<GaussianRational>{0, g("1/2"), g("1/2")});
  EXPECT_EQ(poly_eval(triangle, 4), g("10"));
}

TEST(Polynomial, EvaluationIsMultiplicative) {
  ScalarGen gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<GaussianRational> pc(static_cast<std::size_t>(gen.integer(0, 5)));
    std::vector<GaussianRational> qc(static_cast<std::size_t>(gen.integer(0, 5)));
    for (auto& c : pc) c = gen.gaussian();
    for (auto& c : qc) c = gen.gaussian();
    const UniPolynomial p(pc), q(qc);
    const auto x = gen.gaussian();
    EXPECT_EQ(poly_eval(poly_mul(p, q), x), poly_eval(p, x) * poly_eval(q, x));
    EXPECT_EQ(poly_eval(poly_shift_compose(p, x), g("2")), poly_eval(p, g("2") + x));
  }
}

TEST(Text, RendersCanonicalForms) {
  EXPECT_EQ(render(g("3/2+5/7i")), "3/2+5/7i");
  EXPECT_EQ(render(GaussianRational(make_rational(1, 2), make_rational(-3, 1))), "1/2-3i");
  EXPECT_EQ(render(GaussianRational(0, 2)), "2i");
  EXPECT_EQ(render(GaussianRational(0, -1)), "-i");
  EXPECT_EQ(render(GaussianRational(-4)), "-4");
  EXPECT_EQ(render(GaussianRational{}), "0");
}

TEST(Text, ParsesGrammar) {
  EXPECT_EQ(parse_scalar("3/2+5/7i"), GaussianRational(make_rational(3, 2), make_rational(5, 7)));
  EXPECT_EQ(parse_scalar("-2"), GaussianRational(-2));
  EXPECT_EQ(parse_scalar("i"), GaussianRational::i());
  EXPECT_EQ(parse_scalar("-i"), -GaussianRational::i());
  EXPECT_EQ(parse_scalar("1+1i"), parse_scalar("1+i"));
  EXPECT_EQ(parse_scalar("+4/6"), GaussianRational(make_rational(2, 3)));
  EXPECT_EQ(parse_scalar("-1/2i"), GaussianRational(0, make_rational(-1, 2)));
}

TEST(Text, ParseErrorsCarryPosition) {
  const auto expect_error = [](const char* s, ErrorCode code, std::size_t pos) {
    try {
      parse_scalar(s);
      ADD_FAILURE() << "accepted " << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code) << s;
      EXPECT_EQ(e.position(), pos) << s;
    }
  };
  expect_error("", ErrorCode::ParseError, 0);
  expect_error("1.5", ErrorCode::ParseError, 1);
  expect_error("1+", ErrorCode::ParseError, 2);
  expect_error("1+2", ErrorCode::ParseError, 3);
  expect_error("1 + 2i", ErrorCode::ParseError, 1);
  expect_error("ii", ErrorCode::ParseError, 1);
  expect_error("3/0", ErrorCode::InvalidScalar, 2);
}

TEST(Text, RenderParseRoundTrip) {
  ScalarGen gen(4242);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = gen.gaussian();
    EXPECT_EQ(parse_scalar(render(x)), x) << render(x);
  }
}

TEST(Text, PolynomialRendering) {
  const UniPolynomial p(std::vector<GaussianRational>{0, g("1/2"), g("1/2")});
  EXPECT_EQ(render(p), "1/2*t + 1/2*t^2");
  EXPECT_EQ(render(p, PolyStyle::Latex), "\\frac{1}{2} t + \\frac{1}{2} t^{2}");
  EXPECT_EQ(render(UniPolynomial::t()), "t");
  EXPECT_EQ(render(UniPolynomial{}), "0");
  const UniPolynomial q(std::vector<GaussianRational>{g("-1"), 0, g("-1/3"), g("1+i")});
  EXPECT_EQ(render(q), "-1 - 1/3*t^2 + (1+i)*t^3");
}
