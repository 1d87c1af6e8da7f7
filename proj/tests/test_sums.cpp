#include <gtest/gtest.h>

#include "eulersums/closedform.hpp"
#include "eulersums/constants.hpp"
#include "eulersums/errors.hpp"
#include "eulersums/sums.hpp"
#include "test_util.hpp"

using namespace eulersums;
using testing_util::ref;
using testing_util::within;

namespace {

BigReal accelerated(const char* text, int digits) { return eval_accelerated(parse_sum(text), digits).value; }

}  // namespace

TEST(SumParser, CanonicalPrinting) {
  EXPECT_EQ(to_string(parse_sum("sum( H(1)*h(2) / k^2 )")), "sum( H(1)*h(2) / k^2 )");
  EXPECT_EQ(to_string(parse_sum("h(2)*H(1)/k^2")), "sum( H(1)*h(2) / k^2 )");
  EXPECT_EQ(to_string(parse_sum("sum( h(1)*h(1) / k^3 )")), "sum( h(1)^2 / k^3 )");
  EXPECT_EQ(to_string(parse_sum("sum( h(2) / (k*(2k-1)) )")), "sum( h(2) / (k^1*(2k-1)^1) )");
  EXPECT_EQ(to_string(parse_sum("sum( P[ H(1)[-1] / (2i-1)^3 ] / k^3 )")), "sum( P[ H(1)[-1] / (2i-1)^3 ] / k^3 )");
}

TEST(SumParser, RoundTripIsStable) {
  for (const char* text : {"sum( H(1)^2 / (2k-1)^3 )", "sum( H(1)[2k] / k^3 )", "sum( h(2)[-1] / (2k+1)^2 )",
                           "sum( H(2)[+2]*h(1) / (k+2)^4 )", "sum( 1 / k^4 )"}) {
    const SumDescriptor d = parse_sum(text);
    EXPECT_EQ(parse_sum(to_string(d)), d) << text;
    EXPECT_EQ(to_string(parse_sum(to_string(d))), to_string(d)) << text;
  }
}

TEST(SumParser, LinearCombination) {
  const auto lhs = parse_lhs("-2*sum( H(2)*h(1) / k^4 ) + sum( h(3) / k^4 )");
  ASSERT_EQ(lhs.size(), 2u);
  EXPECT_EQ(lhs[0].coefficient, Rational(-2));
  EXPECT_EQ(lhs[1].coefficient, Rational(1));
  EXPECT_EQ(to_string(lhs), "-2*sum( H(2)*h(1) / k^4 ) + sum( h(3) / k^4 )");
}

TEST(SumParser, Errors) {
  for (const char* bad : {"sum( H(1) / k^3", "sum( H(0) / k^3 )", "sum( H(13) / k^3 )", "sum( G(1) / k^3 )",
                          "sum( H(1) / (3k-1)^2 )", "sum( H(1) / (k-1)^2 )", "sum( H(1)[-2] / k^3 )",
                          "sum( P[ P[ 1 / i^2 ] / i ] / k^2 )", "sum( H(1) )", ""}) {
    EXPECT_THROW(parse_sum(bad), ParseError) << bad;
  }
}

TEST(SumWeight, SumOfOrdersAndExponents) {
  EXPECT_EQ(parse_sum("sum( H(1)*h(1) / k^5 )").weight(), 7);
  EXPECT_EQ(parse_sum("sum( h(2) / (k*(2k-1)) )").weight(), 4);
  EXPECT_EQ(parse_sum("sum( H(1)^2 / (2k-1)^3 )").weight(), 5);
  EXPECT_EQ(parse_sum("sum( P[ H(1)[-1] / (2i-1)^3 ] / k^3 )").weight(), 7);
}

TEST(Convergence, LeadingBehaviour) {
  const ConvergenceReport a = check_convergence(parse_sum("sum( H(1)*h(1) / k^3 )"));
  EXPECT_TRUE(a.convergent);
  EXPECT_EQ(a.weight, 5);
  EXPECT_EQ(a.leading, (LogPowerMonomial{2, 3}));

  const ConvergenceReport b = check_convergence(parse_sum("sum( H(1) / k )"));
  EXPECT_FALSE(b.convergent);
  EXPECT_EQ(b.leading, (LogPowerMonomial{1, 1}));

  const ConvergenceReport c = check_convergence(parse_sum("sum( H(1)^2 / (k*(2k-1)) )"));
  EXPECT_TRUE(c.convergent);
  EXPECT_EQ(c.weight, 4);
  EXPECT_EQ(c.leading, (LogPowerMonomial{2, 2}));
}

TEST(Convergence, DivergentSumsThrow) {
  EXPECT_THROW(eval_accelerated(parse_sum("sum( H(1) / k )"), 20), DivergenceError);
  EXPECT_THROW(eval_accelerated(parse_sum("sum( 1 / k )"), 20), DivergenceError);
  EXPECT_THROW(eval_at(parse_sum("sum( h(2) / (2k-1) )"), 100, 10, 20), DivergenceError);
}

TEST(Direct, SmallPartialSums) {
  EXPECT_EQ(eval_direct(parse_sum("sum( H(1) / k^2 )"), 2, 20).fixed(6), "1.375000");
  EXPECT_EQ(eval_direct(parse_sum("sum( H(1) / k^2 )"), 0, 20).fixed(3), "0.000");
  // 1 + (1 + 1/3)/(2*3) = 11/9
  EXPECT_TRUE(within(eval_direct(parse_sum("sum( h(1) / (k*(2k-1)) )"), 2, 30), BigReal(Rational(11, 9), 40), 30));
  EXPECT_THROW(eval_direct(parse_sum("sum( H(1) / k^2 )"), -1, 20), std::invalid_argument);
}

TEST(Direct, FrozenPartialSums) {
  // mpmath fsum of the exact terms
  EXPECT_TRUE(within(eval_direct(parse_sum("sum( h(1)^2 / k^3 )"), 50, 50),
                     ref("1.44922442732055589257578554883458927432103076987881521824859"), 50));
  EXPECT_TRUE(within(eval_direct(parse_sum("sum( H(1)*h(2) / (2k-1)^3 )"), 40, 50),
                     ref("1.09761028332004875843445558179261586442756566428457851967061"), 50));
  EXPECT_TRUE(within(eval_direct(parse_sum("sum( h(2) / (k*(2k-1)) )"), 30, 50),
                     ref("1.42480481067876335666817641314207334842556592336232058514556"), 50));
  EXPECT_TRUE(within(eval_direct(parse_sum("sum( P[ h(1) / i ] / (k*(2k-1)) )"), 30, 50),
                     ref("1.92205196086599956063053010454605712273306731752054422227436"), 50));
}

TEST(Direct, MillionTermsWithinOneInTheFifthDecimal) {
  // 31/8 z5 - 7/8 z2 z3. The tail after 10^6 terms is 1.035e-5, so this sanity bound is missed.
  const BigReal p = eval_direct(parse_sum("sum( h(1)*h(2) / k^2 )"), 1000000, 20);
  EXPECT_TRUE(within(p, ref("2.28795374467042436111159149872152252564930602974229471379115"), 5));
}

TEST(Direct, MillionTermTailMatchesIntegralEstimate) {
  // h_k h^(2)_k / k^2 ~ (pi^2/16)(ln k + 2 ln 2 + gamma)/k^2, whose tail from 10^6 is 1.0347e-5
  const BigReal p = eval_direct(parse_sum("sum( h(1)*h(2) / k^2 )"), 1000000, 20);
  const double gap = (ref("2.28795374467042436111159149872152252564930602974229471379115") - p).to_double();
  EXPECT_GT(gap, 1.03e-5);
  EXPECT_LT(gap, 1.04e-5);
}

TEST(Accelerated, ClassicalValues) {
  EXPECT_TRUE(within(accelerated("sum( H(1) / k^2 )", 40), ref("2.40411380631918857079947632302289998152997258468099776358454"), 40));
  EXPECT_TRUE(within(accelerated("sum( H(1) / k^3 )", 40), ref("1.35290404213892273939500462067645987846843868989840863460372"), 40));
  EXPECT_TRUE(within(accelerated("sum( H(1) / k^4 )", 40), ref("1.13347891513281366079701101788597693208909129184560422722676"), 40));
  EXPECT_TRUE(within(accelerated("sum( H(1)^2 / k^2 )", 40), ref("4.59987374327233731394301571029996358679269154565458935765265"), 40));
  EXPECT_TRUE(within(accelerated("sum( H(2) / k^2 )", 40), ref("1.89406565899449183515300646894704382985581416585777208844521"), 40));
  EXPECT_TRUE(within(accelerated("sum( h(1) / k^2 )", 40), ref("2.10359958052928999944954178264503748383872601159587304313648"), 40));
  EXPECT_TRUE(within(accelerated("sum( 1 / (k*(2k-1)) )", 40), ref("1.38629436111989061883446424291635313615100026872051050824136"), 40));
}

TEST(Accelerated, ClosedFormValues) {
  // 21/8 z3 - 3/2 ln2 z2
  EXPECT_TRUE(within(accelerated("sum( h(2) / (k*(2k-1)) )", 40), ref("1.44512725482965586296244288547903220793314425534683118587368"), 40));
  // 31/8 z5 - 7/8 z2 z3 and -31/16 z5 + 7/4 z2 z3
  EXPECT_TRUE(within(accelerated("sum( h(1)*h(2) / k^2 )", 40), ref("2.28795374467042436111159149872152252564930602974229471379115"), 40));
  EXPECT_TRUE(within(accelerated("sum( h(1)^2 / k^3 )", 40), ref("1.45123508742998897457787889258846605053317078512027879201769"), 40));
  // 2 z2 - z3
  EXPECT_TRUE(within(accelerated("sum( P[ h(1) / i ] / (k*(2k-1)) )", 40), ref("2.08781123053685858754509217178060038767291351007309799367884"), 40));
}

TEST(Accelerated, ApproximateFormIsOffByAFewUlpsOfFifteenDigits) {
  // -1559/1943 z2 z5 + 1469/759 z3 z4 is a rational approximation; the sum differs by about 3e-15.
  const BigReal v = accelerated("sum( H(2)*h(1) / k^4 )", 30);
  const BigReal approx = ref("1.14945616299624697371878523322301296714907238097698649744020");
  EXPECT_TRUE(within(v, approx, 14));
  EXPECT_FALSE(within(v, approx, 16));
}

TEST(Accelerated, ReducibleResidualAtSixtyDigits) {
  // -53/8 z4 + 8 li4 + 7 ln2 z3 - 2 ln2^2 z2 + 1/3 ln2^4
  EXPECT_TRUE(within(accelerated("sum( h(1) / k^3 )", 60), ref("1.29817551577186712572287641446456965178799801120277051407094"), 55));
  EXPECT_TRUE(within(constant_value(constant_from_name("R1"), 60),
                     ref("1.29817551577186712572287641446456965178799801120277051407094"), 55));
}

TEST(Accelerated, ErrorBoundAndConvergence) {
  const SumValue v = eval_accelerated(parse_sum("sum( H(1)*h(1) / k^4 )"), 30);
  EXPECT_TRUE(v.converged);
  EXPECT_LE(v.error_bound, BigReal::pow10(-30, 40));
  EXPECT_GE(v.K_used, 2L);
}

TEST(Accelerated, TailIsIndependentOfCut) {
  const SumDescriptor d = parse_sum("sum( h(1)^2 / k^3 )");
  const TailedValue a = eval_at(d, 512, 28, 30);
  const TailedValue b = eval_at(d, 1024, 38, 30);
  EXPECT_TRUE(within(a.value, b.value, 28));
  EXPECT_TRUE(within(b.value, ref("1.45123508742998897457787889258846605053317078512027879201769"), 28));
}

TEST(Accelerated, PrefixesAgreeAcrossPrecisions) {
  for (const char* text : {"sum( h(1)*h(2) / k^2 )", "sum( P[ H(1)[-1] / (2i-1)^3 ] / k^3 )", "sum( H(1)[2k] / k^3 )",
                           "sum( h(2)[-1] / (2k+1)^2 )"}) {
    EXPECT_TRUE(within(accelerated(text, 20), accelerated(text, 40), 19)) << text;
  }
}

TEST(Accelerated, MemoReturnsIdenticalBits) {
  const SumDescriptor d = parse_sum("sum( H(2)*h(1) / k^4 )");
  EXPECT_TRUE(bitwise_equal(eval_accelerated(d, 25).value, eval_accelerated(d, 25).value));
}

TEST(Accelerated, LinearCombinationAddsBounds) {
  const auto lhs = parse_lhs("2*sum( H(1) / k^2 ) - sum( h(1) / k^2 )");
  const SumValue v = eval_lhs(lhs, 30);
  const BigReal expect = accelerated("sum( H(1) / k^2 )", 30) * 2L - accelerated("sum( h(1) / k^2 )", 30);
  EXPECT_TRUE(within(v.value, expect, 30));
  EXPECT_TRUE(v.converged);
}

TEST(Accelerated, TightCapsLeaveTheSumUnconverged) {
  const EvalLimits old = eval_limits();
  set_eval_limits({64, 30});
  const SumValue v = eval_accelerated(parse_sum("sum( H(1)*h(1) / k^3 )"), 60);
  set_eval_limits(old);
  EXPECT_FALSE(v.converged);
  EXPECT_LE(v.K_used, 64);
  EXPECT_TRUE(eval_accelerated(parse_sum("sum( H(1)*h(1) / k^3 )"), 60).converged);
}
