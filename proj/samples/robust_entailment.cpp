// How many of the dubious premises can be lost before "the alarm rang"
// stops following? X1 = burglar, X2 = alarm rang, X3 = neighbour called.

#include <iostream>

#include "stablecons/stablecons.hpp"

int main() {
  using namespace stablecons;
  const std::vector<BoolFormula> delta{parse_bool("~X1 \\/ X2")};
  const std::vector<BoolFormula> nabla{parse_bool("X1"), parse_bool("X3"), parse_bool("~X3 \\/ X2"),
                                       parse_bool("X1 /\\ X3")};
  const BoolFormula omega = parse_bool("X2");

  for (std::uint32_t e = 0; e < nabla.size(); ++e) {
    const StableInstance j = robustness_instance(delta, nabla, omega, e);
    const ReductionOutput r = reduce(j);
    std::cout << "e=" << e << "  brute force: " << (stable_via_bruteforce(j) ? "stable" : "unstable")
              << "  reduction: " << (check_consequence_rho(r).is_consequence() ? "consequence" : "countermodel")
              << "  |phi|=" << measure(r.phi).token_count << '\n';
  }

  const EStarResult result = estar(delta, nabla, omega);
  if (result.no_entailment())
    std::cout << "omega does not follow at all\n";
  else
    std::cout << "e* = " << *result.e_star << " after " << result.checks_performed << " checks\n";
}
