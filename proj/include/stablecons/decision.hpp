#ifndef STABLECONS_DECISION_HPP
#define STABLECONS_DECISION_HPP

// Decision procedures.
//
//  - stable_bruteforce: the Stable Consequence question by enumeration of
//    deletion choices and boolean assignments.
//  - check_consequence_rho: Lukasiewicz consequence for reduction outputs.
//    The models of theta are exactly the 2^n lifted grid points, so
//    evaluating phi on that grid decides theta |- phi.
//  - find_countermodel: theta |/- phi for arbitrary pairs by scanning
//    rational points of bounded denominator. Sound, complete only above the
//    (unknown) vertex denominators of the pair.
//  - equivalence_harness and estar build on the above.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stablecons/errors.hpp"
#include "stablecons/formula.hpp"
#include "stablecons/random.hpp"
#include "stablecons/reduction.hpp"
#include "stablecons/semantics.hpp"

namespace stablecons {

/// Hard cap on enumeration work. Procedures check their cost up front and
/// throw BudgetExceededError instead of truncating.
struct Budget {
  std::uint64_t max_steps = std::uint64_t{1} << 26;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max()
                                                          : a + b;
}

inline std::uint64_t saturating_pow2(std::uint32_t n) {
  return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << n;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t next = saturating_mul(r, n - k + i);
    if (next == std::numeric_limits<std::uint64_t>::max()) return next;
    r = next / i;
  }
  return r;
}

/// Advances `c` to the next k-subset of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline void check_budget(const char* what, std::uint64_t cost, const Budget& budget) {
  if (cost > budget.max_steps) throw BudgetExceededError(what, cost, budget.max_steps);
}

}  // namespace detail

// {{{ Stable Consequence by brute force

struct StableCounterexample {
  std::vector<std::vector<std::size_t>> deleted;  // per group, indices into Phi_i
  BoolAssignment assignment;                      // satisfies all survivors
};

struct StableVerdict {
  bool stable = true;
  std::optional<StableCounterexample> counterexample;
};

/// prod_i C(u_i, e_i) * 2^n, saturated at 2^64 - 1.
inline std::uint64_t bruteforce_cost(const StableInstance& instance) {
  std::uint64_t cost = detail::saturating_pow2(instance.n());
  for (const auto& g : instance.groups())
    cost = detail::saturating_mul(cost, detail::binomial(g.formulas.size(), g.delete_count));
  return cost;
}

/// Stable iff for every choice of exactly e_i deletions per group the
/// surviving formulas have no common model. Otherwise returns the first
/// witness: survivor sets in lexicographic order (group 1 most
/// significant), then the lexicographically least model.
inline StableVerdict stable_bruteforce(const StableInstance& instance, const Budget& budget = {}) {
  detail::check_budget("stable_bruteforce", bruteforce_cost(instance), budget);
  const std::uint32_t n = instance.n();
  const auto& groups = instance.groups();

  std::vector<std::vector<TruthTable>> tables;
  for (const auto& g : groups) {
    std::vector<TruthTable> row;
    for (const auto& f : g.formulas) row.push_back(TruthTable::of(f, n));
    tables.push_back(std::move(row));
  }

  std::vector<std::vector<std::size_t>> kept(groups.size());
  std::optional<TruthTable> found;

  std::function<bool(std::size_t, const TruthTable&)> search = [&](std::size_t i,
                                                                   const TruthTable& acc) {
    if (i == groups.size()) {
      found = acc;
      return true;
    }
    const std::size_t u = groups[i].formulas.size();
    std::vector<std::size_t> c(u - groups[i].delete_count);
    std::iota(c.begin(), c.end(), 0);
    do {
      TruthTable t = acc;
      for (std::size_t j : c) t &= tables[i][j];
      // Once the survivors so far are unsatisfiable, so is every extension.
      if (!t.any()) continue;
      kept[i] = c;
      if (search(i + 1, t)) return true;
    } while (detail::next_combination(c, u));
    return false;
  };

  if (!search(0, TruthTable(n, true))) return {true, std::nullopt};

  StableCounterexample cx;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::vector<std::size_t> deleted;
    for (std::size_t j = 0; j < groups[i].formulas.size(); ++j)
      if (!std::binary_search(kept[i].begin(), kept[i].end(), j)) deleted.push_back(j);
    cx.deleted.push_back(std::move(deleted));
  }
  cx.assignment = BoolAssignment::from_index(n, found->first());
  return {false, std::move(cx)};
}

/// Re-checks a counterexample by direct evaluation of the survivors.
inline bool verify_counterexample(const StableInstance& instance, const StableCounterexample& cx) {
  const auto& groups = instance.groups();
  if (cx.deleted.size() != groups.size()) return false;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& del = cx.deleted[i];
    if (del.size() != groups[i].delete_count) return false;
    for (std::size_t j = 0; j < groups[i].formulas.size(); ++j) {
      if (std::find(del.begin(), del.end(), j) != del.end()) continue;
      if (!eval_bool(groups[i].formulas[j], cx.assignment)) return false;
    }
  }
  return true;
}

// }}}

// {{{ Lukasiewicz consequence

enum class VerdictKind { Consequence, Countermodel, InconclusiveAtBound };

struct ConsequenceVerdict {
  VerdictKind kind = VerdictKind::Consequence;
  bool certified = false;            // Consequence only
  std::optional<Valuation> witness;  // Countermodel only
  std::uint64_t bound = 0;           // InconclusiveAtBound only

  static ConsequenceVerdict consequence(bool certified) {
    return {VerdictKind::Consequence, certified, std::nullopt, 0};
  }
  static ConsequenceVerdict countermodel(Valuation witness) {
    return {VerdictKind::Countermodel, false, std::move(witness), 0};
  }
  static ConsequenceVerdict inconclusive(std::uint64_t bound) {
    return {VerdictKind::InconclusiveAtBound, false, std::nullopt, bound};
  }

  bool is_consequence() const noexcept { return kind == VerdictKind::Consequence; }
  bool is_countermodel() const noexcept { return kind == VerdictKind::Countermodel; }
};

/// True iff theta(x) = 1 and phi(x) < 1.
inline bool is_countermodel(const LukFormula& theta, const LukFormula& phi, const Valuation& x) {
  return eval_luk(theta, x).is_one() && !eval_luk(phi, x).is_one();
}

/// Decides theta |- phi for a reduction output by evaluating phi on the
/// grid {1/(e+1), e/(e+1)}^n, which is the model set of theta. Points are
/// visited in lexicographic order; the first failure is the witness.
inline ConsequenceVerdict check_consequence_rho(const ReductionOutput& r, const Budget& budget = {}) {
  const std::uint32_t n = r.n;
  detail::check_budget("check_consequence_rho", detail::saturating_pow2(n), budget);
  const std::int64_t scale = std::int64_t{r.e} + 1;
  std::vector<std::int64_t> point(n);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    for (std::uint32_t i = 1; i <= n; ++i) point[i - 1] = ((a >> (n - i)) & 1U) ? r.e : 1;
    if (evaluate_scaled<std::int64_t>(r.theta, point, scale) != scale)
      throw std::logic_error("check_consequence_rho: grid point is not a model of theta");
    if (evaluate_scaled<std::int64_t>(r.phi, point, scale) != scale) {
      Valuation w;
      for (std::uint32_t i = 1; i <= n; ++i) w.set(VarId(i), Rational01(BigInt(point[i - 1]), BigInt(scale)));
      return ConsequenceVerdict::countermodel(std::move(w));
    }
  }
  return ConsequenceVerdict::consequence(true);
}

/// Number of points find_countermodel visits: sum over b <= bound of
/// (b + 1)^m, saturated.
inline std::uint64_t countermodel_search_cost(std::size_t m, std::uint64_t max_denominator) {
  std::uint64_t total = 0;
  for (std::uint64_t b = 1; b <= max_denominator; ++b) {
    std::uint64_t pts = 1;
    for (std::size_t i = 0; i < m; ++i) pts = detail::saturating_mul(pts, b + 1);
    total = detail::saturating_add(total, pts);
    if (total == std::numeric_limits<std::uint64_t>::max()) break;
  }
  return total;
}

/// Searches for x with theta(x) = 1 and phi(x) < 1 among the points whose
/// coordinates have denominators <= max_denominator, over the variables of
/// theta and phi. Points are visited by increasing common denominator b,
/// each point once, lexicographically within one b.
inline ConsequenceVerdict find_countermodel(const LukFormula& theta, const LukFormula& phi,
                                            std::uint64_t max_denominator, const Budget& budget = {}) {
  if (max_denominator == 0) throw std::invalid_argument("find_countermodel: max_denominator must be >= 1");
  if (max_denominator > (std::uint64_t{1} << 40))
    throw std::invalid_argument("find_countermodel: max_denominator too large");

  std::vector<VarId> vars = variables(theta);
  for (VarId v : variables(phi)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const std::size_t m = vars.size();
  detail::check_budget("find_countermodel", countermodel_search_cost(m, max_denominator), budget);

  std::vector<std::int64_t> point(vars.empty() ? 0 : vars.back().index(), 0);
  std::vector<std::int64_t> digits(m, 0);
  for (std::int64_t b = 1; b <= static_cast<std::int64_t>(max_denominator); ++b) {
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      std::int64_t g = b;
      for (auto d : digits) g = std::gcd(g, d);
      if (g == 1) {
        for (std::size_t i = 0; i < m; ++i) point[vars[i].index() - 1] = digits[i];
        if (evaluate_scaled<std::int64_t>(theta, point, b) == b &&
            evaluate_scaled<std::int64_t>(phi, point, b) != b) {
          Valuation w;
          for (std::size_t i = 0; i < m; ++i) w.set(vars[i], Rational01(BigInt(digits[i]), BigInt(b)));
          return ConsequenceVerdict::countermodel(std::move(w));
        }
      }
      std::size_t i = m;
      while (i > 0 && digits[i - 1] == b) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return ConsequenceVerdict::inconclusive(max_denominator);
}

/// Total connective count of theta and phi: bounds the absolute value of
/// the coefficients of the linear pieces of theta^ and phi^.
inline std::uint64_t coefficient_bound(const LukFormula& theta, const LukFormula& phi) {
  return connective_count(theta) + connective_count(phi);
}

// }}}

// {{{ Equivalence harness

struct HarnessLimits {
  InstanceLimits instance;
  Budget budget;
};

struct HarnessRecord {
  std::uint64_t trial = 0;
  StableInstance instance;
  bool stable = false;       // stable_bruteforce
  bool consequence = false;  // check_consequence_rho(reduce(I))
  bool agree() const noexcept { return stable == consequence; }
};

struct HarnessReport {
  std::uint64_t trials = 0;
  std::uint64_t stable_count = 0;
  std::vector<HarnessRecord> disagreements;
};

/// Draws `trials` random instances from `seed` and compares the brute-force
/// verdict with the consequence verdict on the reduction. `on_record`, if
/// set, sees every trial in order.
inline HarnessReport equivalence_harness(std::uint64_t seed, std::uint64_t trials,
                                         const HarnessLimits& limits = {},
                                         const std::function<void(const HarnessRecord&)>& on_record = {}) {
  Rng rng(seed);
  HarnessReport report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    StableInstance instance = random_instance(rng, limits.instance);
    const bool stable = stable_bruteforce(instance, limits.budget).stable;
    const bool consequence = check_consequence_rho(reduce(instance), limits.budget).is_consequence();
    HarnessRecord record{t, std::move(instance), stable, consequence};
    ++report.trials;
    if (stable) ++report.stable_count;
    if (on_record) on_record(record);
    if (!record.agree()) report.disagreements.push_back(std::move(record));
  }
  return report;
}

// }}}

// {{{ Robustness threshold e*

/// J_e = (Delta u {~omega}, Nabla; 0, e): omega follows from Delta and every
/// Nabla' obtained by deleting e formulas of Nabla iff J_e is stable.
inline StableInstance robustness_instance(const std::vector<BoolFormula>& delta,
                                          const std::vector<BoolFormula>& nabla,
                                          const BoolFormula& omega, std::uint32_t e) {
  FormulaGroup premises{delta, 0};
  const BoolFormula negated = boolean::lnot(omega);
  if (std::find(premises.formulas.begin(), premises.formulas.end(), negated) == premises.formulas.end())
    premises.formulas.push_back(negated);
  FormulaGroup dubious{nabla, e};

  std::uint32_t n = 1;
  for (const auto* group : {&premises, &dubious})
    for (const auto& f : group->formulas)
      for (VarId v : variables(f)) n = std::max(n, v.index());
  return StableInstance(n, {std::move(premises), std::move(dubious)});
}

inline bool stable_via_bruteforce(const StableInstance& instance, const Budget& budget = {}) {
  return stable_bruteforce(instance, budget).stable;
}

inline bool stable_via_reduction(const StableInstance& instance, const Budget& budget = {}) {
  return check_consequence_rho(reduce(instance), budget).is_consequence();
}

struct EStarResult {
  std::optional<std::uint32_t> e_star;  // empty: omega does not follow even at e = 0
  std::uint32_t checks_performed = 0;
  std::size_t nabla_size = 0;

  bool no_entailment() const noexcept { return !e_star.has_value(); }
};

/// Largest e in [0, |Nabla| - 1] with J_e stable, by binary search over
/// `stable` (stability is downward monotone in e).
template <class StabilityCheck>
EStarResult estar(const std::vector<BoolFormula>& delta, const std::vector<BoolFormula>& nabla,
                  const BoolFormula& omega, StabilityCheck&& stable) {
  if (nabla.empty()) throw std::invalid_argument("estar: nabla must be nonempty");
  EStarResult out;
  out.nabla_size = nabla.size();
  auto check = [&](std::uint32_t e) {
    ++out.checks_performed;
    return stable(robustness_instance(delta, nabla, omega, e));
  };
  if (!check(0)) return out;
  std::uint32_t lo = 0;
  auto hi = static_cast<std::uint32_t>(nabla.size() - 1);
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo + 1) / 2;
    if (check(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  out.e_star = lo;
  return out;
}

inline EStarResult estar(const std::vector<BoolFormula>& delta, const std::vector<BoolFormula>& nabla,
                         const BoolFormula& omega, const Budget& budget = {}) {
  return estar(delta, nabla, omega,
               [&](const StableInstance& j) { return stable_via_reduction(j, budget); });
}

// }}}

}  // namespace stablecons

#endif  // STABLECONS_DECISION_HPP
