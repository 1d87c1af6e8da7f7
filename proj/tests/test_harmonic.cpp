#include <gtest/gtest.h>

#include "eulersums/harmonic.hpp"
#include "test_util.hpp"

using namespace eulersums;
using testing_util::within;

namespace {

constexpr HarmonicKind kH1{Family::H, 1, 1, 0};
constexpr HarmonicKind kh1{Family::h, 1, 1, 0};

Rational direct(const HarmonicKind& kind, long k) {
  const long m = kind.scale * k + kind.shift;
  Rational s = 0;
  for (long i = 1; i <= m; ++i) {
    const long b = kind.family == Family::H ? i : 2 * i - 1;
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(kind.order));
    s += Rational(Integer(1), d);
  }
  return s;
}

}  // namespace

TEST(Harmonic, ExactSmallValues) {
  EXPECT_EQ(harmonic_exact(kH1, 4), Rational(25, 12));
  EXPECT_EQ(harmonic_exact(kh1, 3), Rational(23, 15));
  EXPECT_EQ(harmonic_exact({Family::H, 2, 1, 0}, 3), Rational(49, 36));
  EXPECT_EQ(harmonic_exact({Family::h, 2, 1, 0}, 2), Rational(10, 9));
  EXPECT_EQ(harmonic_exact({Family::H, 1, 2, 0}, 2), Rational(25, 12));
  EXPECT_EQ(harmonic_exact({Family::H, 1, 1, -1}, 1), Rational(0));
  EXPECT_EQ(harmonic_exact({Family::h, 3, 1, 2}, 1), direct({Family::h, 3, 1, 0}, 3));
}

TEST(Harmonic, ExactMatchesDirectSummation) {
  for (const HarmonicKind kind : {kH1, kh1, HarmonicKind{Family::H, 3, 2, -1}, HarmonicKind{Family::h, 2, 2, 1},
                                  HarmonicKind{Family::h, 5, 1, 3}}) {
    for (long k : {1L, 2L, 7L, 30L}) EXPECT_EQ(harmonic_exact(kind, k), direct(kind, k));
  }
}

TEST(Harmonic, TableMatchesPointwiseValues) {
  const HarmonicKind kind{Family::h, 2, 2, -1};
  const auto t = harmonic_exact_table(kind, 40);
  ASSERT_EQ(t.size(), 40u);
  for (long k = 1; k <= 40; ++k) EXPECT_EQ(t[k - 1], harmonic_exact(kind, k));
}

TEST(Harmonic, PrefixTableMatchesExactValues) {
  const HarmonicKind kind{Family::H, 2, 1, 1};
  const auto t = prefix_table(kind, 200, 40);
  for (long k : {1L, 17L, 200L}) {
    EXPECT_TRUE(within(t[k - 1], BigReal(harmonic_exact(kind, k), 60), 40));
  }
}

TEST(Harmonic, ExpansionOfHarmonicNumber) {
  // H_k = ln k + gamma + 1/(2k) - ... with error O(k^-(J+1)).
  const auto s = expansion(kH1, 12, 40);
  const long k = 1000;
  EXPECT_TRUE(within(s.evaluate(k), BigReal(harmonic_exact(kH1, k), 60), 36));
}

TEST(Harmonic, ExpansionOfOddHarmonicNumbers) {
  for (int n : {1, 2, 3}) {
    const HarmonicKind kind{Family::h, n, 1, 0};
    const auto s = expansion(kind, 14, 40);
    EXPECT_TRUE(within(s.evaluate(800L), BigReal(harmonic_exact(kind, 800), 60), 38)) << n;
  }
}

TEST(Harmonic, ExpansionWithScaleAndShift) {
  for (const HarmonicKind kind : {HarmonicKind{Family::H, 1, 2, -1}, HarmonicKind{Family::H, 2, 1, 2},
                                  HarmonicKind{Family::h, 1, 1, -1}, HarmonicKind{Family::h, 3, 2, 1}}) {
    const auto s = expansion(kind, 14, 40);
    EXPECT_TRUE(within(s.evaluate(600L), BigReal(harmonic_exact(kind, 600), 60), 34));
  }
}

TEST(Harmonic, ConstantTermsAreLimits) {
  // H^(2)_k -> zeta(2), h^(2)_k -> 3/4 zeta(2).
  const auto s = expansion({Family::H, 2, 1, 0}, 6, 40);
  EXPECT_TRUE(within(s.constant_part(), testing_util::ref("1.64493406684822643647241516664602518921894990120679843773556"), 40));
  const auto t = expansion({Family::h, 2, 1, 0}, 6, 40);
  EXPECT_TRUE(within(t.constant_part(), testing_util::ref("1.23370055013616982735431137498451889191421242590509882830167"), 40));
}

TEST(Harmonic, LinearPowerSeries) {
  const auto s = linear_power_series(2, -1, 3, 20, 40);
  const BigReal exact = BigReal(1L, 60) / pow(BigReal(1999L, 60), 3);
  EXPECT_TRUE(within(s.evaluate(1000L), exact, 48));
  EXPECT_EQ(s.leading_j(), 3);
}

TEST(Harmonic, SeriesProductAndPower) {
  const auto a = expansion(kH1, 12, 40);
  const auto b = expansion({Family::h, 2, 1, 0}, 12, 40);
  const auto ab = series_product(a, b, 12);
  const BigReal va = BigReal(harmonic_exact(kH1, 900), 60);
  const BigReal vb = BigReal(harmonic_exact({Family::h, 2, 1, 0}, 900), 60);
  EXPECT_TRUE(within(ab.evaluate(900L), va * vb, 33));
  const auto a3 = series_power(a, 3, 12);
  EXPECT_TRUE(within(a3.evaluate(900L), va * va * va, 31));
  EXPECT_EQ(a.leading_j(), 0);
  EXPECT_EQ(a.leading_a(), 1);
}
