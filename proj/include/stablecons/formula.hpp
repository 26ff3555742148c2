#ifndef STABLECONS_FORMULA_HPP
#define STABLECONS_FORMULA_HPP

// Abstract syntax for boolean formulas (~, /\, \/) and for formulas of
// infinite-valued Lukasiewicz logic (~, (+), (*), /\, \/).
//
// Formulas are immutable trees with shared subterms. Both logics use the
// same Formula<Logic> template; the Logic traits fix the connective set and
// the binding strength of each connective.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stablecons {

/// Index of a propositional variable X_i, 1-based.
class VarId {
 public:
  explicit constexpr VarId(std::uint32_t index) : index_(index) {
    if (index == 0) throw std::invalid_argument("variable index must be >= 1");
  }

  constexpr std::uint32_t index() const noexcept { return index_; }

  friend constexpr auto operator<=>(VarId, VarId) = default;

 private:
  std::uint32_t index_;
};

inline std::string to_string(VarId v) { return "X" + std::to_string(v.index()); }

/// Classical propositional logic over {~, /\, \/}.
struct BooleanLogic {
  enum class Op : std::uint8_t { Var, Not, And, Or };

  static constexpr Op kNegation = Op::Not;
  static constexpr int kMaxBinding = 1;
  static constexpr std::array kBinaryOps{Op::And, Op::Or};

  static constexpr bool is_binary(Op op) { return op == Op::And || op == Op::Or; }

  // Both lattice connectives sit on the loosest level.
  static constexpr int binding(Op) { return 1; }

  static constexpr std::string_view token(Op op) {
    switch (op) {
      case Op::Not: return "~";
      case Op::And: return "/\\";
      case Op::Or: return "\\/";
      case Op::Var: break;
    }
    return "";
  }
};

/// Infinite-valued Lukasiewicz logic. Otimes, Meet and Join are kept as
/// primitive node kinds although they are definable from Neg and Oplus.
struct LukasiewiczLogic {
  enum class Op : std::uint8_t { Var, Neg, Oplus, Otimes, Meet, Join };

  static constexpr Op kNegation = Op::Neg;
  static constexpr int kMaxBinding = 3;
  static constexpr std::array kBinaryOps{Op::Oplus, Op::Otimes, Op::Meet, Op::Join};

  static constexpr bool is_binary(Op op) {
    return op == Op::Oplus || op == Op::Otimes || op == Op::Meet || op == Op::Join;
  }

  // ~ > (*) > (+) > {/\, \/}
  static constexpr int binding(Op op) {
    switch (op) {
      case Op::Otimes: return 3;
      case Op::Oplus: return 2;
      default: return 1;
    }
  }

  static constexpr std::string_view token(Op op) {
    switch (op) {
      case Op::Neg: return "~";
      case Op::Oplus: return "(+)";
      case Op::Otimes: return "(*)";
      case Op::Meet: return "/\\";
      case Op::Join: return "\\/";
      case Op::Var: break;
    }
    return "";
  }
};

template <class Logic>
class Formula {
 public:
  using Op = typename Logic::Op;
  using logic_type = Logic;

  static Formula variable(VarId v) {
    return Formula(std::make_shared<const Node>(Node{Op::Var, v, nullptr, nullptr}));
  }

  static Formula negation(const Formula& a) {
    return Formula(std::make_shared<const Node>(
        Node{Logic::kNegation, VarId(1), a.node_, nullptr}));
  }

  static Formula binary(Op op, const Formula& a, const Formula& b) {
    if (!Logic::is_binary(op)) throw std::invalid_argument("not a binary connective");
    return Formula(std::make_shared<const Node>(Node{op, VarId(1), a.node_, b.node_}));
  }

  Op op() const noexcept { return node_->op; }
  bool is_var() const noexcept { return node_->op == Op::Var; }
  bool is_negation() const noexcept { return node_->op == Logic::kNegation; }
  bool is_binary() const noexcept { return Logic::is_binary(node_->op); }

  VarId var() const {
    if (!is_var()) throw std::logic_error("formula is not a variable");
    return node_->var;
  }

  /// Operand of a negation, left operand of a binary node.
  Formula left() const {
    if (!node_->left) throw std::logic_error("formula has no operand");
    return Formula(node_->left);
  }
  Formula operand() const { return left(); }

  Formula right() const {
    if (!node_->right) throw std::logic_error("formula has no right operand");
    return Formula(node_->right);
  }

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b) {
    return equal_nodes(a.node_.get(), b.node_.get());
  }

 private:
  struct Node {
    Op op;
    VarId var;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static bool equal_nodes(const Node* a, const Node* b) {
    while (true) {
      if (a == b) return true;
      if (a->op != b->op) return false;
      if (a->op == Op::Var) return a->var == b->var;
      if (a->right && !equal_nodes(a->right.get(), b->right.get())) return false;
      a = a->left.get();
      b = b->left.get();
    }
  }

  std::shared_ptr<const Node> node_;
};

using BoolFormula = Formula<BooleanLogic>;
using LukFormula = Formula<LukasiewiczLogic>;

namespace boolean {

inline BoolFormula var(std::uint32_t i) { return BoolFormula::variable(VarId(i)); }
inline BoolFormula lnot(const BoolFormula& a) { return BoolFormula::negation(a); }
inline BoolFormula land(const BoolFormula& a, const BoolFormula& b) {
  return BoolFormula::binary(BooleanLogic::Op::And, a, b);
}
inline BoolFormula lor(const BoolFormula& a, const BoolFormula& b) {
  return BoolFormula::binary(BooleanLogic::Op::Or, a, b);
}

}  // namespace boolean

namespace luk {

inline LukFormula var(std::uint32_t i) { return LukFormula::variable(VarId(i)); }
inline LukFormula neg(const LukFormula& a) { return LukFormula::negation(a); }
inline LukFormula oplus(const LukFormula& a, const LukFormula& b) {
  return LukFormula::binary(LukasiewiczLogic::Op::Oplus, a, b);
}
inline LukFormula otimes(const LukFormula& a, const LukFormula& b) {
  return LukFormula::binary(LukasiewiczLogic::Op::Otimes, a, b);
}
inline LukFormula meet(const LukFormula& a, const LukFormula& b) {
  return LukFormula::binary(LukasiewiczLogic::Op::Meet, a, b);
}
inline LukFormula join(const LukFormula& a, const LukFormula& b) {
  return LukFormula::binary(LukasiewiczLogic::Op::Join, a, b);
}

/// a -> b, expanded to b (+) ~a.
inline LukFormula implies(const LukFormula& a, const LukFormula& b) {
  return oplus(b, neg(a));
}

/// a <-> b, expanded to (a -> b) (*) (b -> a).
inline LukFormula iff(const LukFormula& a, const LukFormula& b) {
  return otimes(implies(a, b), implies(b, a));
}

/// a^k: left-nested (*) chain of k copies of a.
inline LukFormula power(const LukFormula& a, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("power: exponent must be >= 1");
  LukFormula out = a;
  for (std::uint32_t i = 1; i < k; ++i) out = otimes(out, a);
  return out;
}

/// k.a: left-nested (+) chain of k copies of a.
inline LukFormula multiple(std::uint32_t k, const LukFormula& a) {
  if (k == 0) throw std::invalid_argument("multiple: factor must be >= 1");
  LukFormula out = a;
  for (std::uint32_t i = 1; i < k; ++i) out = oplus(out, a);
  return out;
}

}  // namespace luk

/// Reads a boolean formula as a Lukasiewicz formula: ~ -> Neg, /\ -> Meet,
/// \/ -> Join. The connectives agree on {0,1}.
inline LukFormula embed(const BoolFormula& f) {
  switch (f.op()) {
    case BooleanLogic::Op::Var: return LukFormula::variable(f.var());
    case BooleanLogic::Op::Not: return luk::neg(embed(f.operand()));
    case BooleanLogic::Op::And: return luk::meet(embed(f.left()), embed(f.right()));
    case BooleanLogic::Op::Or: return luk::join(embed(f.left()), embed(f.right()));
  }
  throw std::logic_error("embed: unknown connective");
}

/// Sorted, duplicate-free list of variables occurring in f.
template <class Logic>
std::vector<VarId> variables(const Formula<Logic>& f) {
  std::vector<VarId> out;
  std::vector<Formula<Logic>> stack{f};
  while (!stack.empty()) {
    Formula<Logic> g = stack.back();
    stack.pop_back();
    if (g.is_var()) {
      out.push_back(g.var());
    } else {
      stack.push_back(g.left());
      if (g.is_binary()) stack.push_back(g.right());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Number of variable occurrences (leaves).
template <class Logic>
std::uint64_t variable_occurrences(const Formula<Logic>& f) {
  if (f.is_var()) return 1;
  if (f.is_negation()) return variable_occurrences(f.operand());
  return variable_occurrences(f.left()) + variable_occurrences(f.right());
}

/// Number of connective occurrences (inner nodes).
template <class Logic>
std::uint64_t connective_count(const Formula<Logic>& f) {
  if (f.is_var()) return 0;
  if (f.is_negation()) return 1 + connective_count(f.operand());
  return 1 + connective_count(f.left()) + connective_count(f.right());
}

/// Length of a formula under the canonical fully parenthesized rendering,
/// in which every connective occurrence contributes "(", the connective and
/// ")". token_count counts ASCII tokens of that rendering (X7 is one
/// token); paper_symbol_count spells X_i with unary bars, X|...| with i
/// bars, so a variable costs 1 + i symbols.
struct FormulaLength {
  std::uint64_t token_count = 0;
  std::uint64_t paper_symbol_count = 0;

  FormulaLength& operator+=(const FormulaLength& o) {
    token_count += o.token_count;
    paper_symbol_count += o.paper_symbol_count;
    return *this;
  }
  friend bool operator==(const FormulaLength&, const FormulaLength&) = default;
};

template <class Logic>
FormulaLength measure(const Formula<Logic>& f) {
  if (f.is_var()) return {1, 1 + std::uint64_t{f.var().index()}};
  FormulaLength out{3, 3};
  out += measure(f.left());
  if (f.is_binary()) out += measure(f.right());
  return out;
}

}  // namespace stablecons

#endif  // STABLECONS_FORMULA_HPP
