#include <gtest/gtest.h>

#include "stablecons/parse.hpp"
#include "stablecons/random.hpp"
#include "stablecons/reduction.hpp"
#include "support/reference.hpp"

namespace stablecons {
namespace {

BoolFormula b(const char* text) { return parse_bool(text); }
LukFormula l(const char* text) { return parse_luk(text); }

StableInstance instance(std::uint32_t n, std::vector<std::pair<std::vector<const char*>, std::uint32_t>> shape) {
  std::vector<FormulaGroup> groups;
  for (auto& [texts, e] : shape) {
    FormulaGroup g{{}, e};
    for (const char* t : texts) g.formulas.push_back(b(t));
    groups.push_back(std::move(g));
  }
  return StableInstance(n, std::move(groups));
}

TEST(Nnf, Examples) {
  EXPECT_EQ(nnf(b("~(X1 /\\ X2)")), b("~X1 \\/ ~X2"));
  EXPECT_EQ(nnf(b("~~X1")), b("X1"));
  EXPECT_EQ(nnf(b("~(X1 \\/ ~X2)")), b("~X1 /\\ X2"));
  EXPECT_EQ(nnf(b("~~~X1")), b("~X1"));
}

TEST(Nnf, Properties) {
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const std::uint32_t n = uniform(rng, 1, 4);
    const BoolFormula f = random_formula_upto<BooleanLogic>(rng, n, 10);
    const BoolFormula g = nnf(f);
    EXPECT_TRUE(is_nnf(g)) << to_string(f);
    EXPECT_EQ(nnf(g), g);
    EXPECT_EQ(variables(g), variables(f));
    EXPECT_EQ(variable_occurrences(g), variable_occurrences(f));
    EXPECT_EQ(TruthTable::of(g, n), TruthTable::of(f, n)) << to_string(f);
  }
}

TEST(Ddagger, Examples) {
  EXPECT_EQ(ddagger(b("X1")), l("~X1 \\/ (X1 (+) X1)"));
  EXPECT_EQ(ddagger(b("~X1")), l("X1 \\/ ~(X1 (*) X1)"));
  EXPECT_EQ(ddagger(b("X1 /\\ ~X2")), l("(~X1 \\/ (X1 (+) X1)) /\\ (X2 \\/ ~(X2 (*) X2))"));
  // Negation normal form first.
  EXPECT_EQ(ddagger(b("~(X1 /\\ ~X2)")), l("(X1 \\/ ~(X1 (*) X1)) \\/ (~X2 \\/ (X2 (+) X2))"));
}

TEST(Ddagger, LiteralValuesAtGridPoints) {
  for (std::uint32_t e = 2; e <= 7; ++e) {
    const Rational01 low(BigInt(1), BigInt(e + 1));
    const Rational01 high(BigInt(e), BigInt(e + 1));
    const LukFormula pos = ddagger(b("X1"));
    const LukFormula negd = ddagger(b("~X1"));
    EXPECT_EQ(eval_luk(pos, Valuation::over({low})), high);
    EXPECT_TRUE(eval_luk(pos, Valuation::over({high})).is_one());
    EXPECT_TRUE(eval_luk(negd, Valuation::over({low})).is_one());
    EXPECT_EQ(eval_luk(negd, Valuation::over({high})), high);
  }
}

TEST(Ddagger, DichotomyAtLiftedPoints) {
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = uniform(rng, 1, 4);
    const BoolFormula f = random_formula_upto<BooleanLogic>(rng, n, 8);
    const LukFormula g = ddagger(f);
    for (std::uint32_t e : {2u, 3u, 5u})
      for (std::uint64_t a = 0; a < (1U << n); ++a) {
        const BoolAssignment w = BoolAssignment::from_index(n, a);
        const Rational01 v = eval_luk(g, lift_point(w, e).valuation());
        if (eval_bool(f, w))
          EXPECT_TRUE(v.is_one());
        else
          EXPECT_EQ(v, Rational01(BigInt(e), BigInt(e + 1)));
      }
  }
}

TEST(LiftPoint, Examples) {
  EXPECT_EQ(lift_point(BoolAssignment({true}), 2).coordinates, std::vector{Rational01::parse("2/3")});
  EXPECT_EQ(lift_point(BoolAssignment({false}), 2).coordinates, std::vector{Rational01::parse("1/3")});
  EXPECT_EQ(lift_point(BoolAssignment({false, true, true}), 4).coordinates,
            (std::vector{Rational01::parse("1/5"), Rational01::parse("4/5"), Rational01::parse("4/5")}));
  EXPECT_THROW(lift_point(BoolAssignment({true}), 1), std::invalid_argument);
}

TEST(ConstraintFormula, Examples) {
  const LukFormula c = constraint_formula(1, 2);
  EXPECT_TRUE(eval_luk(c, Valuation::over({Rational01::parse("2/3")})).is_one());
  EXPECT_TRUE(eval_luk(c, Valuation::over({Rational01::parse("1/3")})).is_one());
  EXPECT_EQ(eval_luk(c, Valuation::over({Rational01::parse("1/2")})), Rational01::parse("1/2"));
  EXPECT_EQ(c, l("(X1 (*) X1 <-> ~X1) \\/ (X1 <-> ~(X1 (+) X1))"));
  EXPECT_THROW(constraint_formula(0, 2), std::invalid_argument);
  EXPECT_THROW(constraint_formula(1, 1), std::invalid_argument);
}

TEST(ConstraintFormula, ModelsAreTheGrid) {
  const auto grid = reference::farey(12);
  for (std::uint32_t e : {2u, 3u, 4u, 6u}) {
    const BigRational low(1, e + 1), high(e, e + 1);
    const LukFormula c1 = constraint_formula(1, e);
    const LukFormula c2 = constraint_formula(2, e);
    for (const auto& y : grid) {
      const bool on = y == low || y == high;
      EXPECT_EQ(eval_luk(c1, Valuation::over({Rational01(y)})).is_one(), on);
      for (const auto& z : grid) {
        const bool both = on && (z == low || z == high);
        EXPECT_EQ(eval_luk(c2, Valuation::over({Rational01(y), Rational01(z)})).is_one(), both);
      }
    }
  }
}

TEST(StableInstance, Validation) {
  EXPECT_THROW(instance(1, {{{"X1"}, 1}}), InvalidInstanceError);            // e >= u
  EXPECT_THROW(instance(1, {{{}, 0}}), InvalidInstanceError);                // empty group
  EXPECT_THROW(instance(1, {{{"X1", "(X1)"}, 0}}), InvalidInstanceError);    // duplicate
  EXPECT_THROW(instance(1, {{{"X2"}, 0}}), InvalidInstanceError);            // beyond n
  EXPECT_THROW(instance(1, {}), InvalidInstanceError);                       // k = 0
  EXPECT_THROW(instance(0, {{{"X1"}, 0}}), InvalidInstanceError);            // n = 0
  EXPECT_NO_THROW(instance(2, {{{"X1", "~X1"}, 1}, {{"X1 /\\ X2"}, 0}}));
}

TEST(Consequent, SingleGroup) {
  const StableInstance i = instance(1, {{{"X1"}, 0}});
  EXPECT_EQ(consequent(i, 2), l("~X1 \\/ (X1 (+) X1) -> X1 \\/ ~X1"));
  EXPECT_THROW(consequent(i, 1), std::invalid_argument);
  EXPECT_THROW(consequent(instance(1, {{{"X1", "~X1", "X1 \\/ X1", "X1 /\\ X1"}, 3}}), 2),
               std::invalid_argument);
}

TEST(Consequent, TautologyPowerValue) {
  // (X1 \/ ~X1)^(d+1) = 1 - (d+1)/(e+1) at every grid point.
  for (std::uint32_t e = 2; e <= 5; ++e)
    for (std::uint32_t d = 0; d <= e; ++d) {
      const LukFormula t = luk::power(l("X1 \\/ ~X1"), d + 1);
      for (bool bit : {false, true}) {
        const Rational01 v = eval_luk(t, lift_point(BoolAssignment({bit}), e).valuation());
        EXPECT_EQ(v.value(), BigRational(1) - BigRational(d + 1, e + 1));
      }
    }
}

TEST(Consequent, GroupProductIsMultipleOfGridStep) {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t n = uniform(rng, 1, 3);
    const auto fs = random_distinct_formulas(rng, n, uniform(rng, 1, 4), 5);
    LukFormula product = ddagger(fs.front());
    for (std::size_t j = 1; j < fs.size(); ++j) product = luk::otimes(product, ddagger(fs[j]));
    for (std::uint32_t e : {2u, 3u, 4u})
      for (std::uint64_t a = 0; a < (1U << n); ++a) {
        const Rational01 v = eval_luk(product, lift_point(BoolAssignment::from_index(n, a), e).valuation());
        EXPECT_EQ((e + 1) % v.denominator(), 0);
      }
  }
}

TEST(Reduce, SmallInstance) {
  const ReductionOutput r = reduce(instance(1, {{{"X1", "~X1"}, 0}}));
  EXPECT_EQ(r.e, 2u);
  EXPECT_EQ(r.n, 1u);
  EXPECT_EQ(r.theta, constraint_formula(1, 2));
  EXPECT_EQ(r.phi, l("(~X1 \\/ (X1 (+) X1)) (*) (X1 \\/ ~(X1 (*) X1)) -> X1 \\/ ~X1"));
  EXPECT_TRUE(r.renaming.empty());
}

TEST(Reduce, EIsAtLeastTwoAndTheLargestDeleteCount) {
  EXPECT_EQ(reduce(instance(1, {{{"X1", "~X1"}, 1}})).e, 2u);
  EXPECT_EQ(reduce(instance(1, {{{"X1", "~X1", "X1 /\\ X1", "X1 \\/ X1"}, 3}, {{"X1"}, 0}})).e, 3u);
}

TEST(Reduce, SameVariables) {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const StableInstance in = random_instance(rng, {3, 3, 4, 6});
    const ReductionOutput r = reduce(in);
    auto vs = variables(r.theta);
    for (VarId v : variables(r.phi)) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    ASSERT_EQ(vs.size(), r.n);
    for (std::size_t j = 0; j < vs.size(); ++j) EXPECT_EQ(vs[j].index(), j + 1);
    EXPECT_EQ(variables(r.theta), vs);
    EXPECT_EQ(r.n, in.used_variables().size());
  }
}

TEST(Reduce, NormalizesGaps) {
  const StableInstance in = instance(5, {{{"X2 /\\ X5", "~X5"}, 1}});
  const ReductionOutput r = reduce(in);
  EXPECT_EQ(r.n, 2u);
  EXPECT_EQ(r.renaming, (VariableRenaming{{2, 1}, {5, 2}}));
  EXPECT_EQ(r.phi, consequent(instance(2, {{{"X1 /\\ X2", "~X2"}, 1}}), 2));
}

TEST(Reduce, Stats) {
  const StableInstance in = instance(2, {{{"X1", "~X2"}, 0}});
  const ReductionOutput r = reduce(in);
  EXPECT_EQ(r.stats.instance_length, 2u + 6u);
  EXPECT_EQ(r.stats.output_length, measure(r.theta).paper_symbol_count + measure(r.phi).paper_symbol_count);
  EXPECT_EQ(r.stats.ratio, BigRational(r.stats.output_length, 2 * r.stats.instance_length));
}

}  // namespace
}  // namespace stablecons
