#include <gtest/gtest.h>

#include "eulersums/constants.hpp"
#include "eulersums/errors.hpp"
#include "eulersums/relations.hpp"
#include "test_util.hpp"

using namespace eulersums;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

BigReal value(const char* name, int digits) { return constant_value(constant_from_name(name), digits); }

}  // namespace

TEST(Pslq, EqualValues) {
  const BigReal x = value("z3", 40);
  const RelationResult r = pslq({x, x}, 10000, 40);
  ASSERT_TRUE(r.coefficients);
  EXPECT_EQ(*r.coefficients, ints({1, -1}));
  EXPECT_EQ(r.status, "found");
}

TEST(Pslq, DilogarithmTriple) {
  // 2 Li2(1/2) = z2 - ln2^2
  const RelationResult r = pslq({value("li2", 60), value("z2", 60), value("ln2", 60) * value("ln2", 60)}, 10000, 60);
  ASSERT_TRUE(r.coefficients);
  EXPECT_EQ(*r.coefficients, ints({2, -1, 1}));
  EXPECT_GE(r.confidence_digits, 40);
}

TEST(Pslq, PiAndEHaveNoSmallRelation) {
  const BigReal pi = BigReal::pi(60);
  const BigReal e = exp(BigReal(1L, 75));
  const RelationResult r = pslq({pi, e}, 10000, 60);
  EXPECT_FALSE(r.coefficients);
  EXPECT_GT(r.norm_bound.to_double(), 10000.0);
}

TEST(Pslq, RejectsUnderPrecisionInput) {
  EXPECT_THROW(pslq({value("z3", 20), value("z2", 20)}, 10000, 60), PrecisionError);
}

TEST(Pslq, SoundAtHigherPrecision) {
  const RelationResult r = pslq({value("li2", 60), value("z2", 60), value("ln2", 60) * value("ln2", 60)}, 10000, 60);
  ASSERT_TRUE(r.coefficients);
  const auto& c = *r.coefficients;
  const BigReal fresh = BigReal(c[0], 80) * value("li2", 80) + BigReal(c[1], 80) * value("z2", 80) +
                        BigReal(c[2], 80) * value("ln2", 80) * value("ln2", 80);
  EXPECT_TRUE(testing_util::within(fresh, BigReal(95), r.confidence_digits - 5));
}

TEST(Pslq, NoiseDestroysRelation) {
  BigReal li2 = value("li2", 60);
  li2 += BigReal::pow10(-30, 75);
  const RelationResult r = pslq({li2, value("z2", 60), value("ln2", 60) * value("ln2", 60)}, 10000, 60);
  EXPECT_FALSE(r.coefficients);
}

TEST(Pslq, ScaleInvariance) {
  const Rational s(3, 7);
  std::vector<BigReal> xs = {value("li2", 60), value("z2", 60), value("ln2", 60) * value("ln2", 60)};
  const RelationResult a = pslq(xs, 10000, 60);
  for (auto& x : xs) x = x * s;
  const RelationResult b = pslq(xs, 10000, 60);
  ASSERT_TRUE(a.coefficients);
  ASSERT_TRUE(b.coefficients);
  EXPECT_EQ(*a.coefficients, *b.coefficients);
}

TEST(Discover, EighthFamilySquare) {
  const Discovery d = discover(parse_lhs("sum( h(1)^2 / k^3 )"), 5, false, false, 60, kDiscoveryMaxCoeff);
  ASSERT_TRUE(d.form);
  EXPECT_EQ(serialize(*d.form), "-31/16*z5 + 7/4*z2*z3");
}

TEST(Discover, EighthFamilyProduct) {
  const Discovery d = discover(parse_lhs("sum( h(1)*h(2) / k^2 )"), 5, false, false, 60, kDiscoveryMaxCoeff);
  ASSERT_TRUE(d.form);
  EXPECT_EQ(serialize(*d.form), "31/8*z5 - 7/8*z2*z3");
}

TEST(Discover, LinearDenominatorWithLowerWeights) {
  const Discovery d = discover(parse_lhs("sum( h(2) / (k^1*(2k-1)^1) )"), 3, false, true, 40, kDiscoveryMaxCoeff);
  ASSERT_TRUE(d.form);
  EXPECT_EQ(serialize(*d.form), "21/8*z3 - 3/2*ln2*z2");
}

TEST(Discover, ApproximationSumHasNoSmallRelation) {
  const Discovery d = discover(parse_lhs("sum( H(2)*h(1) / k^4 )"), 7, false, false, 30, kDiscoveryMaxCoeff);
  EXPECT_FALSE(d.form);
  EXPECT_FALSE(d.basis.empty());
}

TEST(Discover, ValueAgainstExplicitBasis) {
  const BigReal v = value("z2", 50) * Rational(3, 4) - value("ln2", 50) * value("ln2", 50);
  const Discovery d = discover_value(
      v, {Monomial(ConstantId::zeta(2)), Monomial(ConstantId::ln2(), 2)}, 50, kDiscoveryMaxCoeff);
  ASSERT_TRUE(d.form);
  EXPECT_EQ(serialize(*d.form), "3/4*z2 - ln2^2");
}

TEST(Discover, DependentBasisIsReported) {
  // li2 = 1/2 z2 - 1/2 ln2^2 makes the basis itself dependent.
  const Discovery d =
      discover_value(value("z3", 50),
                     {Monomial(ConstantId::li_half(2)), Monomial(ConstantId::zeta(2)), Monomial(ConstantId::ln2(), 2)},
                     50, kDiscoveryMaxCoeff);
  EXPECT_FALSE(d.form);
  EXPECT_EQ(d.relation.status, "basis-dependency");
}

TEST(SimplestRational, SmallestDenominatorInInterval) {
  EXPECT_EQ(simplest_rational(Rational(3, 10), Rational(4, 10)), Rational(1, 3));
  EXPECT_EQ(simplest_rational(Rational(-4, 10), Rational(-3, 10)), Rational(-1, 3));
  EXPECT_EQ(simplest_rational(Rational(-1, 2), Rational(1, 3)), Rational(0));
  EXPECT_EQ(simplest_rational(Rational(7, 3), Rational(5, 2)), Rational(5, 2));
  EXPECT_EQ(simplest_rational(Rational(5, 2), Rational(7, 3)), Rational(5, 2));
  EXPECT_EQ(simplest_rational(Rational(13, 10), Rational(27, 10)), Rational(2));
  const Rational q(-1559, 1943);
  const Rational eps(Integer(1), Integer("1000000000000"));
  EXPECT_EQ(simplest_rational(q - eps, q + eps), q);
}
