#include <gtest/gtest.h>

#include "apsum/audit.hpp"
#include "apsum/series.hpp"
#include "apsum/text.hpp"
#include "support/oracles.hpp"

using namespace apsum;
using apsum::testing::ScalarGen;

namespace {

GaussianRational g(const char* s) { return parse_scalar(s); }

PowerSumQuery query(const char* a, const char* d, std::uint64_t t, std::uint64_t p,
                    bool alternating = false) {
  return {g(a), g(d), t, p, alternating};
}

}  // namespace

TEST(OracleL, Examples) {
  EXPECT_EQ(oracle_L(query("1", "1", 3, 2)), g("14"));
  EXPECT_EQ(oracle_L(query("i", "1", 2, 2)), g("-1+2i"));
  EXPECT_EQ(oracle_L(query("3/2+5/7i", "2", 1, 4)), pow_int(g("3/2+5/7i"), 4));
}

TEST(OracleL, AcceptsZeroStep) {
  EXPECT_EQ(oracle_L(query("2", "0", 5, 3)), g("40"));
}

TEST(OracleT, Examples) {
  EXPECT_EQ(oracle_T(query("1", "1", 3, 1, true)), g("2"));
  EXPECT_EQ(oracle_T(query("1", "1", 4, 0, true)), g("0"));
  EXPECT_EQ(oracle_T(query("1-i", "1/2", 1, 3, true)), pow_int(g("1-i"), 3));
}

TEST(Oracle, RejectsZeroTerms) {
  EXPECT_THROW(oracle_L(query("1", "1", 0, 2)), Error);
  EXPECT_THROW(oracle_T(query("1", "1", 0, 2, true)), Error);
}

TEST(BaseL, Examples) {
  EXPECT_EQ(base_L(query("1", "1", 5, 1)), g("15"));
  EXPECT_EQ(base_L(query("7/3", "i", 6, 0)), g("6"));
  EXPECT_EQ(base_L(query("2", "3", 3, 1)), g("15"));
  try {
    base_L(query("1", "1", 3, 3));
    FAIL() << "expected UnsupportedPower";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedPower);
  }
}

TEST(BaseL, MatchesOracleOnGrid) {
  auto samples = default_samples();
  samples.push_back({g("5"), g("0")});  // zero step is fine here
  for (const auto& s : samples) {
    for (std::uint64_t t = 1; t <= 8; ++t) {
      for (std::uint64_t p = 0; p <= 2; ++p) {
        const PowerSumQuery q{s.a, s.d, t, p, false};
        EXPECT_EQ(base_L(q), oracle_L(q)) << render(s.a) << " " << render(s.d) << " t=" << t;
      }
    }
  }
}

TEST(SplitT, Examples) {
  EXPECT_EQ(split_T(query("1", "1", 3, 1, true)), g("2"));
  EXPECT_EQ(split_T(query("1", "1", 4, 3, true)), g("-44"));
  EXPECT_EQ(split_T(query("i", "1", 2, 1, true)), g("-1"));
}

TEST(SplitT, AgreesWithOracle) {
  for (const auto& s : default_samples()) {
    for (std::uint64_t t = 1; t <= 12; ++t) {
      for (std::uint64_t p = 0; p <= 10; ++p) {
        const PowerSumQuery q{s.a, s.d, t, p, true};
        ASSERT_EQ(split_T(q), oracle_T(q)) << render(s.a) << " t=" << t << " p=" << p;
      }
    }
  }
}

TEST(SeriesProperties, Homogeneity) {
  ScalarGen gen(31337);
  for (int trial = 0; trial < 80; ++trial) {
    const auto a = gen.gaussian(), d = gen.gaussian(), c = gen.nonzero();
    const auto t = static_cast<std::uint64_t>(gen.integer(1, 8));
    const auto p = static_cast<std::uint64_t>(gen.integer(0, 8));
    for (bool alternating : {false, true}) {
      const PowerSumQuery base{a, d, t, p, alternating};
      const PowerSumQuery scaled{c * a, c * d, t, p, alternating};
      const auto f = alternating ? oracle_T : oracle_L;
      EXPECT_EQ(f(scaled), pow_int(c, p) * f(base));
    }
  }
}

TEST(SeriesProperties, ShiftRelation) {
  ScalarGen gen(2718);
  for (int trial = 0; trial < 80; ++trial) {
    const auto a = gen.gaussian(), d = gen.gaussian();
    const auto t = static_cast<std::uint64_t>(gen.integer(1, 8));
    const auto p = static_cast<std::uint64_t>(gen.integer(0, 8));
    const PowerSumQuery q{a, d, t, p, false};
    const PowerSumQuery shifted{a + d, d, t, p, false};
    EXPECT_EQ(oracle_L(shifted), oracle_L(q) - pow_int(a, p) + pow_int(a + GaussianRational(t) * d, p));
  }
}
