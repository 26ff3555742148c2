#ifndef STABLECONS_RANDOM_HPP
#define STABLECONS_RANDOM_HPP

// Seeded generators for formulas and instances, used by the equivalence
// harness and by the property tests. Output depends only on the seed.

#include <cstdint>
#include <random>
#include <vector>

#include "stablecons/formula.hpp"
#include "stablecons/reduction.hpp"

namespace stablecons {

using Rng = std::mt19937_64;

inline std::uint32_t uniform(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

/// Random formula over X_1..X_n with exactly `connectives` connectives.
template <class Logic>
Formula<Logic> random_formula(Rng& rng, std::uint32_t n, std::uint32_t connectives) {
  using F = Formula<Logic>;
  if (connectives == 0) return F::variable(VarId(uniform(rng, 1, n)));
  // Negation roughly one time in three.
  if (uniform(rng, 0, 2) == 0) return F::negation(random_formula<Logic>(rng, n, connectives - 1));
  const auto& ops = Logic::kBinaryOps;
  const auto op = ops[uniform(rng, 0, static_cast<std::uint32_t>(ops.size() - 1))];
  const std::uint32_t left = uniform(rng, 0, connectives - 1);
  F a = random_formula<Logic>(rng, n, left);
  F b = random_formula<Logic>(rng, n, connectives - 1 - left);
  return F::binary(op, a, b);
}

/// Random formula with a uniformly drawn number of connectives in [0, max].
template <class Logic>
Formula<Logic> random_formula_upto(Rng& rng, std::uint32_t n, std::uint32_t max_connectives) {
  return random_formula<Logic>(rng, n, uniform(rng, 0, max_connectives));
}

struct InstanceLimits {
  std::uint32_t max_groups = 3;       // k
  std::uint32_t max_group_size = 3;   // u(i)
  std::uint32_t max_variables = 3;    // n
  std::uint32_t max_connectives = 6;  // per formula
};

/// Up to `size` pairwise distinct formulas; fewer only if the generator
/// keeps producing duplicates.
inline std::vector<BoolFormula> random_distinct_formulas(Rng& rng, std::uint32_t n, std::uint32_t size,
                                                         std::uint32_t max_connectives) {
  std::vector<BoolFormula> out;
  for (int attempt = 0; out.size() < size && attempt < 64; ++attempt) {
    BoolFormula f = random_formula_upto<BooleanLogic>(rng, n, max_connectives);
    bool fresh = true;
    for (const auto& g : out) fresh = fresh && !(g == f);
    if (fresh) out.push_back(f);
  }
  return out;
}

inline StableInstance random_instance(Rng& rng, const InstanceLimits& limits) {
  const std::uint32_t n = uniform(rng, 1, limits.max_variables);
  const std::uint32_t k = uniform(rng, 1, limits.max_groups);
  std::vector<FormulaGroup> groups;
  for (std::uint32_t i = 0; i < k; ++i) {
    FormulaGroup g;
    g.formulas = random_distinct_formulas(rng, n, uniform(rng, 1, limits.max_group_size),
                                          limits.max_connectives);
    g.delete_count = uniform(rng, 0, static_cast<std::uint32_t>(g.formulas.size() - 1));
    groups.push_back(std::move(g));
  }
  return StableInstance(n, std::move(groups));
}

}  // namespace stablecons

#endif  // STABLECONS_RANDOM_HPP
