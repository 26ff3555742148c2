#ifndef STABLECONS_REDUCTION_HPP
#define STABLECONS_REDUCTION_HPP

// Reduction of the Stable Consequence problem to Lukasiewicz consequence.
//
// An instance I = (Phi_1, ..., Phi_k; e_1, ..., e_k) over X_1..X_n maps to
// the pair rho(I) = (theta, phi) with e = max(2, e_1, ..., e_k),
//
//   theta = /\_t ((X_t^e <-> ~X_t) \/ (X_t <-> ~e.X_t))
//   phi   = /\_i ((phi_i1' (*) ... (*) phi_iu' ) -> (X_1 \/ ~X_1)^(e_i + 1))
//
// where ' is the double-dagger transform of a boolean formula. The models
// of theta are exactly the points of {1/(e+1), e/(e+1)}^n, and I is stable
// iff every model of theta satisfies phi.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "stablecons/errors.hpp"
#include "stablecons/formula.hpp"
#include "stablecons/parse.hpp"
#include "stablecons/rational.hpp"
#include "stablecons/semantics.hpp"

namespace stablecons {

/// One set Phi_i of boolean formulas together with its deletion count e_i.
struct FormulaGroup {
  std::vector<BoolFormula> formulas;
  std::uint32_t delete_count = 0;
};

/// A Stable Consequence instance over X_1..X_n. Construction enforces:
/// k >= 1, every group nonempty with pairwise distinct formulas,
/// 0 <= e_i < |Phi_i|, and every variable index <= n.
class StableInstance {
 public:
  StableInstance(std::uint32_t n, std::vector<FormulaGroup> groups)
      : n_(n), groups_(std::move(groups)) {
    if (n_ == 0) throw InvalidInstanceError("instance needs at least one variable (n >= 1)");
    if (groups_.empty()) throw InvalidInstanceError("instance needs at least one group");
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      const auto& g = groups_[i];
      const std::string where = "group " + std::to_string(i);
      if (g.formulas.empty()) throw InvalidInstanceError(where + " is empty");
      if (g.delete_count >= g.formulas.size())
        throw InvalidInstanceError(where + ": delete count " + std::to_string(g.delete_count) +
                                   " must be smaller than the group size " +
                                   std::to_string(g.formulas.size()));
      for (std::size_t a = 0; a < g.formulas.size(); ++a) {
        for (VarId v : variables(g.formulas[a]))
          if (v.index() > n_)
            throw InvalidInstanceError(where + " uses " + to_string(v) + " beyond n = " +
                                       std::to_string(n_));
        for (std::size_t b = 0; b < a; ++b)
          if (g.formulas[a] == g.formulas[b])
            throw InvalidInstanceError(where + " contains the formula " +
                                       to_string(g.formulas[a]) + " twice");
      }
    }
  }

  std::uint32_t n() const noexcept { return n_; }
  const std::vector<FormulaGroup>& groups() const noexcept { return groups_; }

  /// Distinct variables occurring in the instance, sorted.
  std::vector<VarId> used_variables() const {
    std::vector<VarId> out;
    for (const auto& g : groups_)
      for (const auto& f : g.formulas) {
        auto vs = variables(f);
        out.insert(out.end(), vs.begin(), vs.end());
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::uint32_t max_delete_count() const {
    std::uint32_t m = 0;
    for (const auto& g : groups_) m = std::max(m, g.delete_count);
    return m;
  }

 private:
  std::uint32_t n_;
  std::vector<FormulaGroup> groups_;
};

/// Old index -> new index, for every variable that was renumbered.
using VariableRenaming = std::map<std::uint32_t, std::uint32_t>;

inline BoolFormula rename_variables(const BoolFormula& f, const VariableRenaming& renaming) {
  using Op = BooleanLogic::Op;
  switch (f.op()) {
    case Op::Var: {
      auto it = renaming.find(f.var().index());
      return it == renaming.end() ? f : boolean::var(it->second);
    }
    case Op::Not: return boolean::lnot(rename_variables(f.operand(), renaming));
    case Op::And:
      return boolean::land(rename_variables(f.left(), renaming), rename_variables(f.right(), renaming));
    case Op::Or:
      return boolean::lor(rename_variables(f.left(), renaming), rename_variables(f.right(), renaming));
  }
  throw std::logic_error("rename_variables: unknown connective");
}

struct NormalizedInstance {
  StableInstance instance;
  VariableRenaming renaming;  // empty when no renumbering was needed
};

/// Renumbers the variables of `groups` onto X_1..X_m, m the number of
/// distinct variables used, preserving their order. The result's n is m.
inline NormalizedInstance normalize_variables(const std::vector<FormulaGroup>& groups) {
  std::vector<VarId> used;
  for (const auto& g : groups)
    for (const auto& f : g.formulas) {
      auto vs = variables(f);
      used.insert(used.end(), vs.begin(), vs.end());
    }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  VariableRenaming renaming;
  for (std::size_t i = 0; i < used.size(); ++i) {
    const auto target = static_cast<std::uint32_t>(i + 1);
    if (used[i].index() != target) renaming.emplace(used[i].index(), target);
  }
  if (renaming.empty())
    return {StableInstance(static_cast<std::uint32_t>(used.size()), groups), {}};

  std::vector<FormulaGroup> renamed;
  renamed.reserve(groups.size());
  for (const auto& g : groups) {
    FormulaGroup r{{}, g.delete_count};
    for (const auto& f : g.formulas) r.formulas.push_back(rename_variables(f, renaming));
    renamed.push_back(std::move(r));
  }
  return {StableInstance(static_cast<std::uint32_t>(used.size()), std::move(renamed)),
          std::move(renaming)};
}

/// Negation normal form: negations pushed onto variables by De Morgan,
/// double negations removed. Keeps the variable occurrences.
inline BoolFormula nnf(const BoolFormula& f) {
  using Op = BooleanLogic::Op;
  switch (f.op()) {
    case Op::Var: return f;
    case Op::And: return boolean::land(nnf(f.left()), nnf(f.right()));
    case Op::Or: return boolean::lor(nnf(f.left()), nnf(f.right()));
    case Op::Not: break;
  }
  const BoolFormula g = f.operand();
  switch (g.op()) {
    case Op::Var: return f;
    case Op::Not: return nnf(g.operand());
    case Op::And: return boolean::lor(nnf(boolean::lnot(g.left())), nnf(boolean::lnot(g.right())));
    case Op::Or: return boolean::land(nnf(boolean::lnot(g.left())), nnf(boolean::lnot(g.right())));
  }
  throw std::logic_error("nnf: unknown connective");
}

inline bool is_nnf(const BoolFormula& f) {
  if (f.is_var()) return true;
  if (f.is_negation()) return f.operand().is_var();
  return is_nnf(f.left()) && is_nnf(f.right());
}

namespace detail {

inline LukFormula ddagger_nnf(const BoolFormula& f) {
  using Op = BooleanLogic::Op;
  switch (f.op()) {
    case Op::Var: {
      const LukFormula x = LukFormula::variable(f.var());
      return luk::join(luk::neg(x), luk::oplus(x, x));
    }
    case Op::Not: {
      const LukFormula x = LukFormula::variable(f.operand().var());
      return luk::join(x, luk::neg(luk::otimes(x, x)));
    }
    case Op::And: return luk::meet(ddagger_nnf(f.left()), ddagger_nnf(f.right()));
    case Op::Or: return luk::join(ddagger_nnf(f.left()), ddagger_nnf(f.right()));
  }
  throw std::logic_error("ddagger: unknown connective");
}

}  // namespace detail

/// Double-dagger transform. On the negation normal form of f, replaces
///   X_i  by ~X_i \/ (X_i (+) X_i)
///   ~X_i by  X_i \/ ~(X_i (*) X_i)
/// and maps /\, \/ to the lattice connectives. At a lifted point w<e> the
/// result is 1 if w satisfies f and e/(e+1) otherwise.
inline LukFormula ddagger(const BoolFormula& f) { return detail::ddagger_nnf(nnf(f)); }

/// Boolean point moved to distance 1/(e+1) from its corner: 0 goes to
/// 1/(e+1), 1 goes to e/(e+1).
struct LiftedPoint {
  std::vector<Rational01> coordinates;
  std::uint32_t e = 2;

  Valuation valuation() const { return Valuation::over(coordinates); }
};

inline LiftedPoint lift_point(const BoolAssignment& w, std::uint32_t e) {
  if (e < 2) throw std::invalid_argument("lift_point: e must be >= 2");
  LiftedPoint p;
  p.e = e;
  const Rational01 low(BigInt(1), BigInt(e + 1));
  const Rational01 high(BigInt(e), BigInt(e + 1));
  for (bool b : w.values()) p.coordinates.push_back(b ? high : low);
  return p;
}

/// /\_{t=1..n} ((X_t^e <-> ~X_t) \/ (X_t <-> ~e.X_t)). Its models are
/// exactly the points with every coordinate in {1/(e+1), e/(e+1)}.
inline LukFormula constraint_formula(std::uint32_t n, std::uint32_t e) {
  if (n == 0) throw std::invalid_argument("constraint_formula: n must be >= 1");
  if (e < 2) throw std::invalid_argument("constraint_formula: e must be >= 2");
  auto conjunct = [e](std::uint32_t t) {
    const LukFormula x = luk::var(t);
    return luk::join(luk::iff(luk::power(x, e), luk::neg(x)),
                     luk::iff(x, luk::neg(luk::multiple(e, x))));
  };
  LukFormula out = conjunct(1);
  for (std::uint32_t t = 2; t <= n; ++t) out = luk::meet(out, conjunct(t));
  return out;
}

/// (phi_1' (*) ... (*) phi_u') -> (X_1 \/ ~X_1)^(d + 1) for one group.
inline LukFormula group_implication(const FormulaGroup& group) {
  if (group.formulas.empty()) throw std::invalid_argument("group_implication: empty group");
  LukFormula product = ddagger(group.formulas.front());
  for (std::size_t j = 1; j < group.formulas.size(); ++j)
    product = luk::otimes(product, ddagger(group.formulas[j]));
  const LukFormula x1 = luk::var(1);
  return luk::implies(product, luk::power(luk::join(x1, luk::neg(x1)), group.delete_count + 1));
}

enum class GroupCombination { Join, Meet };

/// Consequent formula of the reduction: the group implications combined by
/// \/. At a grid point the implication of group i is 1 iff the point
/// falsifies more than e_i members of the group, and stability asks for
/// some such group at every point, hence the join. The Meet form asks for
/// all groups at once; it agrees with stability only when k = 1 and is kept
/// for comparison.
///
/// The formula does not depend on e; e is checked against
/// e >= max(2, e_1, ..., e_k).
inline LukFormula consequent(const StableInstance& instance, std::uint32_t e,
                             GroupCombination combine = GroupCombination::Join) {
  if (e < std::max<std::uint32_t>(2, instance.max_delete_count()))
    throw std::invalid_argument("consequent: e must be >= max(2, e_1, ..., e_k)");
  const auto& groups = instance.groups();
  LukFormula out = group_implication(groups.front());
  for (std::size_t i = 1; i < groups.size(); ++i)
    out = combine == GroupCombination::Join ? luk::join(out, group_implication(groups[i]))
                                            : luk::meet(out, group_implication(groups[i]));
  return out;
}

/// Sum of paper_symbol_count over all formulas of the instance.
inline std::uint64_t instance_length(const StableInstance& instance) {
  std::uint64_t total = 0;
  for (const auto& g : instance.groups())
    for (const auto& f : g.formulas) total += measure(f).paper_symbol_count;
  return total;
}

struct ReductionStats {
  std::uint64_t instance_length = 0;  // |I|
  std::uint64_t output_length = 0;    // |theta| + |phi|
  std::uint32_t n = 0;
  BigRational ratio;                  // output_length / (n * instance_length)
};

struct ReductionOutput {
  LukFormula theta;
  LukFormula phi;
  std::uint32_t e = 2;
  std::uint32_t n = 1;
  ReductionStats stats;
  VariableRenaming renaming;  // applied to the input before reducing
};

inline ReductionOutput reduce(const StableInstance& input,
                              GroupCombination combine = GroupCombination::Join) {
  const auto used = input.used_variables();
  bool contiguous = used.size() == input.n();
  for (std::size_t i = 0; contiguous && i < used.size(); ++i)
    contiguous = used[i].index() == i + 1;

  NormalizedInstance normalized = contiguous ? NormalizedInstance{input, {}}
                                             : normalize_variables(input.groups());
  const StableInstance& instance = normalized.instance;

  const std::uint32_t e = std::max<std::uint32_t>(2, instance.max_delete_count());
  ReductionOutput out{constraint_formula(instance.n(), e), consequent(instance, e, combine), e,
                      instance.n(), {}, std::move(normalized.renaming)};
  out.stats.instance_length = instance_length(instance);
  out.stats.output_length =
      measure(out.theta).paper_symbol_count + measure(out.phi).paper_symbol_count;
  out.stats.n = instance.n();
  out.stats.ratio = BigRational(BigInt(out.stats.output_length),
                                BigInt(std::uint64_t{instance.n()} * out.stats.instance_length));
  return out;
}

}  // namespace stablecons

#endif  // STABLECONS_REDUCTION_HPP
