#ifndef STABLECONS_SEMANTICS_HPP
#define STABLECONS_SEMANTICS_HPP

// Exact semantics. A Lukasiewicz formula phi denotes the piecewise linear
// map phi^ : [0,1]^n -> [0,1],
//
//   ~a      1 - a
//   a (+) b min(1, a + b)
//   a (*) b max(0, a + b - 1)
//   a /\ b  min(a, b)
//   a \/ b  max(a, b)
//
// Every clause maps multiples of 1/D to multiples of 1/D, so evaluation at
// a rational point runs on integer numerators over the common denominator
// D of the point's coordinates.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "stablecons/errors.hpp"
#include "stablecons/formula.hpp"
#include "stablecons/rational.hpp"

namespace stablecons {

/// Assignment of values in [0,1] to a declared set of variables.
class Valuation {
 public:
  Valuation() = default;

  /// Declares X_1..X_n with values xs[0..n-1].
  static Valuation over(const std::vector<Rational01>& xs) {
    Valuation v;
    for (std::size_t i = 0; i < xs.size(); ++i)
      v.set(VarId(static_cast<std::uint32_t>(i + 1)), xs[i]);
    return v;
  }

  void set(VarId var, const Rational01& value) { values_.insert_or_assign(var, value); }

  bool declares(VarId var) const { return values_.contains(var); }

  const Rational01& at(VarId var) const {
    auto it = values_.find(var);
    if (it == values_.end()) throw UnboundVariableError(var.index());
    return it->second;
  }

  const std::map<VarId, Rational01>& entries() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<VarId, Rational01> values_;
};

/// Two-valued assignment to X_1..X_n.
class BoolAssignment {
 public:
  BoolAssignment() = default;
  explicit BoolAssignment(std::vector<bool> values) : values_(std::move(values)) {}

  /// Assignment number `index` in lexicographic order of (X_1, ..., X_n),
  /// false before true: X_i is bit n - i of index.
  static BoolAssignment from_index(std::uint32_t n, std::uint64_t index) {
    std::vector<bool> values(n);
    for (std::uint32_t i = 1; i <= n; ++i) values[i - 1] = ((index >> (n - i)) & 1U) != 0;
    return BoolAssignment(std::move(values));
  }

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(values_.size()); }

  bool at(VarId var) const {
    if (var.index() > values_.size()) throw UnboundVariableError(var.index());
    return values_[var.index() - 1];
  }

  const std::vector<bool>& values() const noexcept { return values_; }

  friend bool operator==(const BoolAssignment&, const BoolAssignment&) = default;

 private:
  std::vector<bool> values_;
};

/// Value of f times `scale` at the point numerators[i-1] / scale for X_i.
/// Every numerator must lie in [0, scale]; Int must hold 2 * scale.
template <class Int>
Int evaluate_scaled(const LukFormula& f, std::span<const Int> numerators, const Int& scale) {
  using Op = LukasiewiczLogic::Op;
  switch (f.op()) {
    case Op::Var: {
      const auto i = f.var().index();
      if (i > numerators.size()) throw UnboundVariableError(i);
      return numerators[i - 1];
    }
    case Op::Neg:
      return scale - evaluate_scaled(f.operand(), numerators, scale);
    default:
      break;
  }
  const Int a = evaluate_scaled(f.left(), numerators, scale);
  const Int b = evaluate_scaled(f.right(), numerators, scale);
  switch (f.op()) {
    case Op::Oplus: {
      Int s = a + b;
      return s > scale ? scale : s;
    }
    case Op::Otimes: {
      Int s = a + b;
      return s > scale ? Int(s - scale) : Int(0);
    }
    case Op::Meet: return a < b ? a : b;
    case Op::Join: return a < b ? b : a;
    default: break;
  }
  throw std::logic_error("evaluate_scaled: unknown connective");
}

namespace detail {

template <class Int>
Rational01 eval_with(const LukFormula& f, const Valuation& x, const BigInt& scale) {
  std::uint32_t max_index = 0;
  for (const auto& [var, _] : x.entries()) max_index = std::max(max_index, var.index());
  std::vector<Int> numerators(max_index, Int(0));
  for (const auto& [var, value] : x.entries()) {
    const BigInt n = value.numerator() * (scale / value.denominator());
    numerators[var.index() - 1] = static_cast<Int>(n);
  }
  const Int s = static_cast<Int>(scale);
  const Int v = evaluate_scaled<Int>(f, numerators, s);
  return Rational01(BigInt(v), scale);
}

}  // namespace detail

/// Exact value of f at x. Every variable of f must be declared by x.
inline Rational01 eval_luk(const LukFormula& f, const Valuation& x) {
  for (VarId v : variables(f))
    if (!x.declares(v)) throw UnboundVariableError(v.index());

  BigInt scale = 1;
  for (const auto& [_, value] : x.entries())
    scale = boost::multiprecision::lcm(scale, value.denominator());

  // Sums of two values stay below 2 * scale.
  if (scale < (BigInt(1) << 61)) return detail::eval_with<std::int64_t>(f, x, scale);
  return detail::eval_with<BigInt>(f, x, scale);
}

inline bool eval_bool(const BoolFormula& f, const BoolAssignment& w) {
  using Op = BooleanLogic::Op;
  switch (f.op()) {
    case Op::Var: return w.at(f.var());
    case Op::Not: return !eval_bool(f.operand(), w);
    case Op::And: return eval_bool(f.left(), w) && eval_bool(f.right(), w);
    case Op::Or: return eval_bool(f.left(), w) || eval_bool(f.right(), w);
  }
  throw std::logic_error("eval_bool: unknown connective");
}

/// True iff every formula evaluates to exactly 1 at x.
inline bool satisfies(const Valuation& x, std::span<const LukFormula> formulas) {
  return std::all_of(formulas.begin(), formulas.end(),
                     [&](const LukFormula& f) { return eval_luk(f, x).is_one(); });
}

/// Bitset over the 2^n assignments to X_1..X_n; bit a is the value under
/// BoolAssignment::from_index(n, a).
class TruthTable {
 public:
  TruthTable() = default;
  TruthTable(std::uint32_t n, bool fill) : n_(n), words_(word_count(n), fill ? ~0ULL : 0ULL) {
    trim();
  }

  static TruthTable of(const BoolFormula& f, std::uint32_t n) {
    using Op = BooleanLogic::Op;
    switch (f.op()) {
      case Op::Var: return variable(f.var(), n);
      case Op::Not: return ~of(f.operand(), n);
      case Op::And: return of(f.left(), n) & of(f.right(), n);
      case Op::Or: return of(f.left(), n) | of(f.right(), n);
    }
    throw std::logic_error("TruthTable: unknown connective");
  }

  static TruthTable variable(VarId var, std::uint32_t n) {
    if (var.index() > n) throw UnboundVariableError(var.index());
    static constexpr std::uint64_t kPatterns[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    TruthTable t(n, false);
    const std::uint32_t bit = n - var.index();
    for (std::size_t w = 0; w < t.words_.size(); ++w) {
      if (bit < 6)
        t.words_[w] = kPatterns[bit];
      else
        t.words_[w] = ((w >> (bit - 6)) & 1U) ? ~0ULL : 0ULL;
    }
    t.trim();
    return t;
  }

  std::uint32_t variables() const noexcept { return n_; }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }

  bool test(std::uint64_t index) const { return (words_[index / 64] >> (index % 64)) & 1U; }

  /// Smallest assignment index with a set bit; only meaningful when any().
  std::uint64_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::uint64_t>(std::countr_zero(words_[w]));
    throw std::logic_error("TruthTable::first on empty table");
  }

  TruthTable& operator&=(const TruthTable& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  TruthTable& operator|=(const TruthTable& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }
  friend TruthTable operator|(TruthTable a, const TruthTable& b) { return a |= b; }
  friend TruthTable operator~(TruthTable a) {
    for (auto& w : a.words_) w = ~w;
    a.trim();
    return a;
  }
  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  static std::size_t word_count(std::uint32_t n) {
    if (n >= 40) throw std::length_error("truth table too large");
    return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
  }

  void trim() {
    if (n_ < 6) words_[0] &= (1ULL << (1U << n_)) - 1;
  }

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_{0};
};

}  // namespace stablecons

#endif  // STABLECONS_SEMANTICS_HPP
