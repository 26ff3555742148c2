#ifndef STABLECONS_TESTS_REFERENCE_HPP
#define STABLECONS_TESTS_REFERENCE_HPP

// Test-only oracles. They share the AST with the library but none of its
// evaluation, truth-table or enumeration code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "stablecons/formula.hpp"
#include "stablecons/rational.hpp"
#include "stablecons/reduction.hpp"

namespace stablecons::reference {

/// Direct recursion over rationals: the textbook clauses, no common
/// denominator.
inline BigRational eval(const LukFormula& f, const std::vector<BigRational>& x) {
  using Op = LukasiewiczLogic::Op;
  switch (f.op()) {
    case Op::Var: return x.at(f.var().index() - 1);
    case Op::Neg: return BigRational(1) - eval(f.operand(), x);
    default: break;
  }
  const BigRational a = eval(f.left(), x);
  const BigRational b = eval(f.right(), x);
  switch (f.op()) {
    case Op::Oplus: return std::min(BigRational(1), BigRational(a + b));
    case Op::Otimes: return std::max(BigRational(0), BigRational(a + b - 1));
    case Op::Meet: return std::min(a, b);
    case Op::Join: return std::max(a, b);
    default: break;
  }
  throw std::logic_error("reference::eval");
}

inline bool eval(const BoolFormula& f, const std::vector<bool>& w) {
  using Op = BooleanLogic::Op;
  switch (f.op()) {
    case Op::Var: return w.at(f.var().index() - 1);
    case Op::Not: return !eval(f.operand(), w);
    case Op::And: return eval(f.left(), w) && eval(f.right(), w);
    case Op::Or: return eval(f.left(), w) || eval(f.right(), w);
  }
  throw std::logic_error("reference::eval");
}

/// w as bits: X_i is bit i-1 of mask (deliberately not the library order).
inline std::vector<bool> bits(std::uint32_t n, std::uint64_t mask) {
  std::vector<bool> w(n);
  for (std::uint32_t i = 0; i < n; ++i) w[i] = (mask >> i) & 1U;
  return w;
}

inline bool satisfiable(const std::vector<BoolFormula>& fs, std::uint32_t n) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const auto w = bits(n, m);
    if (std::all_of(fs.begin(), fs.end(), [&](const BoolFormula& f) { return eval(f, w); })) return true;
  }
  return false;
}

/// Deletion patterns of a group as bitmasks over its members.
inline std::vector<std::uint64_t> deletion_masks(std::size_t u, std::uint32_t d, bool up_to) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << u); ++m) {
    const auto c = static_cast<std::uint32_t>(std::popcount(m));
    if (c == d || (up_to && c < d)) out.push_back(m);
  }
  return out;
}

/// Stability by exhaustive enumeration. With up_to, deletions of at most
/// e_i formulas per group are tried as well.
inline bool stable(const StableInstance& instance, bool up_to = false) {
  const auto& groups = instance.groups();
  std::vector<std::vector<std::uint64_t>> choices;
  for (const auto& g : groups) choices.push_back(deletion_masks(g.formulas.size(), g.delete_count, up_to));
  std::vector<std::size_t> idx(groups.size(), 0);
  while (true) {
    std::vector<BoolFormula> survivors;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = 0; j < groups[i].formulas.size(); ++j)
        if (!((choices[i][idx[i]] >> j) & 1U)) survivors.push_back(groups[i].formulas[j]);
    if (satisfiable(survivors, instance.n())) return false;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) return true;
  }
}

/// Fraction in lowest terms for every p/q in [0,1] with q <= max_den.
inline std::vector<BigRational> farey(std::uint32_t max_den) {
  std::vector<BigRational> out;
  for (std::uint32_t q = 1; q <= max_den; ++q)
    for (std::uint32_t p = 0; p <= q; ++p) out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Random tree of depth <= depth over X_1..X_n.
template <class Logic>
Formula<Logic> random_tree(std::mt19937_64& rng, std::uint32_t n, std::uint32_t depth) {
  using F = Formula<Logic>;
  std::uniform_int_distribution<std::uint32_t> var(1, n);
  std::uniform_int_distribution<std::uint32_t> pick(0, 3);
  if (depth == 0 || pick(rng) == 0) return F::variable(VarId(var(rng)));
  if (pick(rng) == 0) return F::negation(random_tree<Logic>(rng, n, depth - 1));
  const auto& ops = Logic::kBinaryOps;
  std::uniform_int_distribution<std::size_t> op(0, ops.size() - 1);
  const auto o = ops[op(rng)];
  F a = random_tree<Logic>(rng, n, depth - 1);
  return F::binary(o, a, random_tree<Logic>(rng, n, depth - 1));
}

}  // namespace stablecons::reference

#endif  // STABLECONS_TESTS_REFERENCE_HPP
