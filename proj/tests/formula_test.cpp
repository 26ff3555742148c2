#include <random>

#include <gtest/gtest.h>

#include "stablecons/formula.hpp"
#include "stablecons/parse.hpp"
#include "support/reference.hpp"

namespace stablecons {
namespace {

using boolean::land;
using boolean::lnot;
using boolean::lor;
using luk::join;
using luk::meet;
using luk::neg;
using luk::oplus;
using luk::otimes;

BoolFormula bx(std::uint32_t i) { return boolean::var(i); }
LukFormula lx(std::uint32_t i) { return luk::var(i); }

TEST(ParseBool, Examples) {
  EXPECT_EQ(parse_bool("X1"), bx(1));
  EXPECT_EQ(parse_bool("(~X1 /\\ X2)"), land(lnot(bx(1)), bx(2)));
  EXPECT_EQ(parse_bool("~~X3"), lnot(lnot(bx(3))));
}

TEST(ParseBool, ChainsNestLeft) {
  EXPECT_EQ(parse_bool("X1 /\\ X2 /\\ X3"), land(land(bx(1), bx(2)), bx(3)));
  EXPECT_EQ(parse_bool("X1 \\/ (X2 /\\ X3)"), lor(bx(1), land(bx(2), bx(3))));
  EXPECT_EQ(parse_bool("  X12\t"), bx(12));
}

TEST(ParseBool, Errors) {
  auto offset_of = [](std::string_view text) -> std::ptrdiff_t {
    try {
      parse_bool(text);
    } catch (const ParseError& e) {
      return static_cast<std::ptrdiff_t>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of("X0"), 0);
  EXPECT_EQ(offset_of("~X01"), 1);
  EXPECT_EQ(offset_of("X1 /\\"), 5);
  EXPECT_EQ(offset_of("X1 /\\ X2 \\/ X3"), 9);
  EXPECT_EQ(offset_of("(X1 /\\ X2"), 9);
  EXPECT_EQ(offset_of("X1 X2"), 3);
  EXPECT_EQ(offset_of("X1 (+) X2"), 3);
  EXPECT_EQ(offset_of("X1 -> X2"), 3);
  EXPECT_EQ(offset_of("Y1"), 0);
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of("X99999999999"), 0);
}

TEST(ParseLuk, Precedence) {
  EXPECT_EQ(parse_luk("~X1 (+) X2"), oplus(neg(lx(1)), lx(2)));
  EXPECT_EQ(parse_luk("X1 (*) X2 (+) X3"), oplus(otimes(lx(1), lx(2)), lx(3)));
  EXPECT_EQ(parse_luk("X1 \\/ X2 (+) X3"), join(lx(1), oplus(lx(2), lx(3))));
  EXPECT_EQ(parse_luk("X1 (+) X2 (*) X3"), oplus(lx(1), otimes(lx(2), lx(3))));
  EXPECT_EQ(parse_luk("~(X1 (+) X2)"), neg(oplus(lx(1), lx(2))));
}

TEST(ParseLuk, MixedLatticeConnectivesNeedParentheses) {
  EXPECT_THROW(parse_luk("X1 /\\ X2 \\/ X3"), ParseError);
  EXPECT_EQ(parse_luk("(X1 /\\ X2) \\/ X3"), join(meet(lx(1), lx(2)), lx(3)));
  EXPECT_EQ(parse_luk("X1 /\\ X2 /\\ X3"), meet(meet(lx(1), lx(2)), lx(3)));
}

TEST(ParseLuk, ArrowsExpand) {
  EXPECT_EQ(parse_luk("X1 -> X2"), oplus(lx(2), neg(lx(1))));
  EXPECT_EQ(parse_luk("X1 <-> X2"), luk::iff(lx(1), lx(2)));
  // Right associative, weakest binding.
  EXPECT_EQ(parse_luk("X1 -> X2 -> X3"), luk::implies(lx(1), luk::implies(lx(2), lx(3))));
  EXPECT_EQ(parse_luk("X1 -> X2 \\/ X3"), luk::implies(lx(1), join(lx(2), lx(3))));
}

TEST(Derived, Implies) {
  EXPECT_EQ(luk::implies(lx(1), lx(2)), oplus(lx(2), neg(lx(1))));
  EXPECT_EQ(luk::iff(lx(1), lx(2)),
            otimes(luk::implies(lx(1), lx(2)), luk::implies(lx(2), lx(1))));
}

TEST(Derived, PowerAndMultiple) {
  EXPECT_EQ(luk::power(lx(1), 1), lx(1));
  EXPECT_EQ(luk::power(lx(1), 3), otimes(otimes(lx(1), lx(1)), lx(1)));
  EXPECT_EQ(luk::multiple(1, lx(1)), lx(1));
  EXPECT_EQ(luk::multiple(3, lx(1)), oplus(oplus(lx(1), lx(1)), lx(1)));
  EXPECT_THROW(luk::power(lx(1), 0), std::invalid_argument);
  EXPECT_THROW(luk::multiple(0, lx(1)), std::invalid_argument);
}

TEST(Derived, PowerLengthGrowsLinearly) {
  const LukFormula a = parse_luk("X2 (+) ~X1");
  const auto step = measure(luk::power(a, 2)).paper_symbol_count - measure(a).paper_symbol_count;
  for (std::uint32_t k = 2; k < 10; ++k) {
    EXPECT_EQ(measure(luk::power(a, k + 1)).paper_symbol_count - measure(luk::power(a, k)).paper_symbol_count,
              step);
    EXPECT_EQ(connective_count(luk::power(a, k)), k * connective_count(a) + (k - 1));
  }
}

TEST(Derived, VariablesArePreserved) {
  const LukFormula a = parse_luk("X3 (*) ~X1");
  for (std::uint32_t k = 1; k < 5; ++k) {
    EXPECT_EQ(variables(luk::power(a, k)), variables(a));
    EXPECT_EQ(variables(luk::multiple(k, a)), variables(a));
  }
}

TEST(Measure, Examples) {
  EXPECT_EQ(measure(bx(2)).paper_symbol_count, 3u);
  EXPECT_EQ(measure(lnot(bx(1))).paper_symbol_count, 5u);
  EXPECT_EQ(measure(land(bx(1), bx(1))).token_count, 5u);
  EXPECT_EQ(measure(land(bx(1), bx(1))).paper_symbol_count, 7u);
  EXPECT_EQ(measure(lx(7)), (FormulaLength{1, 8}));
}

TEST(Measure, StrictlyMonotoneAndSymbolsDominateTokens) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const LukFormula a = reference::random_tree<LukasiewiczLogic>(rng, 4, 5);
    const LukFormula b = reference::random_tree<LukasiewiczLogic>(rng, 4, 5);
    const FormulaLength la = measure(a);
    EXPECT_GE(la.paper_symbol_count, la.token_count);
    for (const LukFormula& bigger : {neg(a), oplus(a, b), otimes(a, b), meet(a, b), join(b, a)}) {
      const FormulaLength lb = measure(bigger);
      EXPECT_GT(lb.token_count, la.token_count);
      EXPECT_GT(lb.paper_symbol_count, la.paper_symbol_count);
    }
  }
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(to_string(oplus(oplus(lx(1), lx(2)), lx(3))), "X1 (+) X2 (+) X3");
  EXPECT_EQ(to_string(oplus(lx(1), oplus(lx(2), lx(3)))), "X1 (+) (X2 (+) X3)");
  EXPECT_EQ(to_string(meet(join(lx(1), lx(2)), lx(3))), "(X1 \\/ X2) /\\ X3");
  EXPECT_EQ(to_string(oplus(otimes(lx(1), lx(2)), neg(lx(3)))), "X1 (*) X2 (+) ~X3");
  EXPECT_EQ(to_string(otimes(oplus(lx(1), lx(2)), lx(3))), "(X1 (+) X2) (*) X3");
  EXPECT_EQ(to_string(neg(neg(meet(lx(1), lx(2))))), "~~(X1 /\\ X2)");
  EXPECT_EQ(to_string(land(lnot(bx(1)), bx(2))), "~X1 /\\ X2");
}

template <class Logic>
void check_round_trip(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 2000; ++i) {
    const auto f = reference::random_tree<Logic>(rng, 12, 8);
    const std::string text = to_string(f);
    if constexpr (std::is_same_v<Logic, BooleanLogic>) {
      ASSERT_EQ(parse_bool(text), f) << text;
    } else {
      ASSERT_EQ(parse_luk(text), f) << text;
    }
  }
}

TEST(Print, RoundTripBoolean) { check_round_trip<BooleanLogic>(1); }
TEST(Print, RoundTripLukasiewicz) { check_round_trip<LukasiewiczLogic>(2); }

TEST(Formula, StructuralEquality) {
  EXPECT_EQ(parse_luk("X1 (+) X2"), parse_luk("(X1) (+) (X2)"));
  EXPECT_FALSE(parse_luk("X1 (+) X2") == parse_luk("X2 (+) X1"));
  EXPECT_FALSE(parse_luk("X1 /\\ X2") == parse_luk("X1 \\/ X2"));
  EXPECT_THROW(VarId(0), std::invalid_argument);
}

TEST(Formula, EmbedMapsConnectives) {
  EXPECT_EQ(embed(parse_bool("~X1 /\\ (X2 \\/ X3)")), parse_luk("~X1 /\\ (X2 \\/ X3)"));
}

}  // namespace
}  // namespace stablecons
