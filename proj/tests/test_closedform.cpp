#include <gtest/gtest.h>

#include <random>

#include "eulersums/catalog.hpp"
#include "eulersums/closedform.hpp"
#include "eulersums/errors.hpp"
#include "test_util.hpp"

using namespace eulersums;
using testing_util::ref;
using testing_util::within;

namespace {

Monomial mono(std::initializer_list<std::pair<ConstantId, int>> atoms) {
  Monomial m;
  for (const auto& [id, e] : atoms) m.multiply(id, e);
  return m;
}

}  // namespace

TEST(ClosedForm, ParsesLinearDenominatorForm) {
  const ClosedForm cf = parse_closedform("21/8*z3 - 3/2*ln2*z2");
  EXPECT_EQ(cf.terms().size(), 2u);
  EXPECT_EQ(cf.coefficient(Monomial(ConstantId::zeta(3))), Rational(21, 8));
  EXPECT_EQ(cf.coefficient(mono({{ConstantId::ln2(), 1}, {ConstantId::zeta(2), 1}})), Rational(-3, 2));
}

TEST(ClosedForm, ZeroIsEmpty) {
  EXPECT_TRUE(parse_closedform("0").empty());
  EXPECT_EQ(serialize(ClosedForm()), "0");
}

TEST(ClosedForm, EighthFamilyFormIsHomogeneous) {
  const ClosedForm cf = parse_closedform("-31/16*z5 + 7/4*z2*z3");
  EXPECT_EQ(cf.terms().size(), 2u);
  EXPECT_TRUE(is_homogeneous(cf));
  EXPECT_EQ(weights(cf), std::set<int>{5});
}

TEST(ClosedForm, SerializesInCanonicalOrder) {
  ClosedForm cf;
  cf.add(mono({{ConstantId::zeta(2), 1}, {ConstantId::zeta(3), 1}}), Rational(7, 4));
  cf.add(Monomial(ConstantId::zeta(5)), Rational(-31, 16));
  EXPECT_EQ(serialize(cf), "-31/16*z5 + 7/4*z2*z3");
  EXPECT_EQ(serialize(parse_closedform("- 3/2 * z2*ln2 + 21/8*z3")), "21/8*z3 - 3/2*ln2*z2");
}

TEST(ClosedForm, CollectsLikeTermsAndDropsZeros) {
  EXPECT_EQ(serialize(parse_closedform("z3 + ln2*z2 - z3 + 1/2*z2*ln2")), "3/2*ln2*z2");
  EXPECT_EQ(serialize(parse_closedform("2/4*z3 - 1/2*z3")), "0");
  EXPECT_EQ(serialize(parse_closedform("ln2*ln2*z3")), "ln2^2*z3");
}

TEST(ClosedForm, RationalsAndUnitMonomial) {
  const ClosedForm cf = parse_closedform("5/2");
  EXPECT_EQ(cf.coefficient(Monomial()), Rational(5, 2));
  EXPECT_EQ(evaluate(cf, 30).fixed(3), "2.500");
  EXPECT_EQ(serialize(parse_closedform("-4 + 2*ln2")), "2*ln2 - 4");
}

TEST(ClosedForm, SumConstantsMapToNamedResiduals) {
  EXPECT_EQ(serialize(parse_closedform("S[h(1) / k^3]")), "R1");
  EXPECT_EQ(serialize(parse_closedform("2*S[ H(2)*h(1) / k^4 ]")), "2*R4");
  EXPECT_EQ(serialize(parse_closedform("z2*S[h(3) / k^2]")), "z2*S[h(3) / k^2]");
  EXPECT_TRUE(is_homogeneous(parse_closedform("z7 + z2*S[h(3) / k^2]")));
}

TEST(ClosedForm, ParseErrorsCarryPositions) {
  try {
    parse_closedform("21/8*z3 - 3/2*");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GE(e.position(), 13u);
  }
  try {
    parse_closedform("1/0*z3");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  EXPECT_THROW(parse_closedform("z3 +"), ParseError);
  EXPECT_THROW(parse_closedform("S[h(1) / k^3"), ParseError);
}

TEST(ClosedForm, UnknownConstantNames) {
  EXPECT_THROW(parse_closedform("3*zeta3"), UnknownNameError);
  EXPECT_THROW(parse_closedform("z13"), UnknownNameError);
  EXPECT_THROW(parse_closedform("R5"), UnknownNameError);
}

TEST(ClosedForm, EvaluatesLinearDenominatorRhs) {
  // 21/8 z3 - 3/2 ln2 z2 (mpmath, 60 digits)
  const BigReal v = evaluate(parse_closedform("21/8*z3 - 3/2*ln2*z2"), 40);
  EXPECT_TRUE(within(v, ref("1.44512725482965586296244288547903220793314425534683118587368"), 40));
}

TEST(ClosedForm, MixedWeightFormIsFlagged) {
  const Identity* e5 = find_identity(builtin_catalog(), "II.5");
  const Identity* e15 = find_identity(builtin_catalog(), "III.15");
  ASSERT_NE(e5, nullptr);
  ASSERT_NE(e15, nullptr);
  EXPECT_FALSE(is_homogeneous(e5->rhs));
  EXPECT_TRUE(e5->mixed_weight());
  EXPECT_TRUE(is_homogeneous(e15->rhs));
  EXPECT_FALSE(e15->mixed_weight());
}

TEST(ClosedForm, CatalogRoundTripIsExactAndIdempotent) {
  for (const auto& e : builtin_catalog()) {
    const std::string once = serialize(e.rhs);
    const ClosedForm back = parse_closedform(once);
    EXPECT_TRUE(back == e.rhs) << e.id;
    EXPECT_EQ(serialize(back), once) << e.id;
  }
}

TEST(ClosedForm, RandomizedRoundTrip) {
  std::mt19937 rng(20240611);
  const std::vector<std::string> atoms = {"z2", "z3", "z5", "z7", "ln2", "li4", "li5", "gamma", "R1", "R4",
                                          "S[h(3) / k^2]", "S[H(1) / (2k-1)^4]"};
  std::uniform_int_distribution<int> n_terms(0, 6), n_atoms(0, 3), pick(0, static_cast<int>(atoms.size()) - 1),
      num(-50, 50), den(1, 40), expo(1, 3);
  for (int round = 0; round < 300; ++round) {
    ClosedForm cf;
    const int terms = n_terms(rng);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      const int k = n_atoms(rng);
      for (int a = 0; a < k; ++a) m = m * parse_closedform(atoms[pick(rng)]).terms().begin()->first;
      Rational q(num(rng), den(rng));
      q.canonicalize();
      if (k > 0 && expo(rng) == 3) m = m * m;
      cf.add(m, q);
    }
    const std::string text = serialize(cf);
    EXPECT_TRUE(parse_closedform(text) == cf) << text;
    EXPECT_EQ(serialize(parse_closedform(text)), text);
  }
}

TEST(ClosedForm, EvaluateIsAdditive) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 17);
  const std::vector<std::string> atoms = {"z3", "ln2*z2", "z5", "li4*ln2", "z2*z3", "ln2^3", "gamma"};
  for (int round = 0; round < 50; ++round) {
    std::string ta, tb;
    auto term = [&](const std::string& a) {
      const int n = num(rng);
      return std::string(n < 0 ? " - " : " + ") + std::to_string(std::abs(n)) + "/" + std::to_string(den(rng)) + "*" + a;
    };
    for (const auto& a : atoms) {
      ta += term(a);
      tb += term(a);
    }
    const ClosedForm a = parse_closedform(ta.substr(3));
    const ClosedForm b = parse_closedform(tb.substr(3));
    const BigReal sum = evaluate(a, 40) + evaluate(b, 40);
    EXPECT_TRUE(within(sum, evaluate(a + b, 40), 50));
  }
}

TEST(ClosedForm, EvaluateRefinesWithDigits) {
  const ClosedForm cf = parse_closedform("-3175/32*z7 + 341/8*z2*z5 + 81/4*z3*z4 + 2*R4");
  EXPECT_TRUE(within(evaluate(cf, 20), evaluate(cf, 40), 20));
}
