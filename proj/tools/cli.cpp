#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stablecons/decision.hpp"
#include "stablecons/json_io.hpp"
#include "stablecons/parse.hpp"
#include "stablecons/reduction.hpp"
#include "stablecons/semantics.hpp"

namespace stablecons::cli {
namespace {

using json::Json;

struct UsageError : Error {
  using Error::Error;
};

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return Json::parse(text);
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

/// "X1=1/3" or "X1=1/3,X2=2/3".
Valuation parse_assignments(const std::vector<std::string>& items) {
  Valuation x;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw UsageError("expected VAR=VALUE, got '" + part + "'");
      const std::string name = part.substr(0, eq);
      const LukFormula v = parse_luk(name);
      if (!v.is_var()) throw UsageError("expected a variable name, got '" + name + "'");
      try {
        x.set(v.var(), Rational01::parse(part.substr(eq + 1)));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + " for " + name);
      }
    }
  }
  return x;
}

struct Options {
  std::string bool_text;
  std::string luk_text;
  std::string file;
  std::vector<std::string> at;
  bool stats = false;
  std::uint64_t budget = Budget{}.max_steps;
  std::string theta;
  std::string phi;
  std::uint64_t max_denominator = 12;
  std::vector<std::string> delta;
  std::vector<std::string> nabla;
  std::string omega;
  std::string via = "rho";
  std::uint64_t seed = 7;
  std::uint64_t trials = 200;
  InstanceLimits limits;
};

int cmd_parse(const Options& o, std::ostream& out) {
  if (o.bool_text.empty() == o.luk_text.empty()) throw UsageError("give exactly one of --bool, --luk");
  auto describe = [&](const auto& f, const char* logic) {
    Json vars = Json::array();
    for (VarId v : variables(f)) vars.push_back(to_string(v));
    const FormulaLength len = measure(f);
    emit(out, Json{{"logic", logic},
                   {"formula", to_string(f)},
                   {"variables", std::move(vars)},
                   {"length", Json{{"tokens", len.token_count}, {"paper_symbols", len.paper_symbol_count}}}});
  };
  if (!o.bool_text.empty())
    describe(parse_bool(o.bool_text), "boolean");
  else
    describe(parse_luk(o.luk_text), "lukasiewicz");
  return kAffirmative;
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.bool_text.empty() == o.luk_text.empty()) throw UsageError("give exactly one of --bool, --luk");
  const Valuation x = parse_assignments(o.at);
  if (!o.luk_text.empty()) {
    emit(out, Json{{"value", eval_luk(parse_luk(o.luk_text), x).to_string()}});
    return kAffirmative;
  }
  const BoolFormula f = parse_bool(o.bool_text);
  std::uint32_t n = 0;
  for (VarId v : variables(f)) {
    if (!x.declares(v)) throw UnboundVariableError(v.index());
    n = std::max(n, v.index());
  }
  std::vector<bool> values(n, false);
  for (const auto& [var, value] : x.entries()) {
    if (!value.is_zero() && !value.is_one())
      throw UsageError("boolean value of " + to_string(var) + " must be 0 or 1");
    if (var.index() <= n) values[var.index() - 1] = value.is_one();
  }
  emit(out, Json{{"value", eval_bool(f, BoolAssignment(values)) ? "1" : "0"}});
  return kAffirmative;
}

int cmd_nnf(const Options& o, std::ostream& out) {
  emit(out, Json{{"nnf", to_string(nnf(parse_bool(o.bool_text)))}});
  return kAffirmative;
}

int cmd_ddagger(const Options& o, std::ostream& out) {
  emit(out, Json{{"ddagger", to_string(ddagger(parse_bool(o.bool_text)))}});
  return kAffirmative;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  NormalizedInstance in = json::instance_from_json(read_json_file(o.file));
  ReductionOutput r = reduce(in.instance);
  if (r.renaming.empty()) r.renaming = in.renaming;
  emit(out, json::to_json(r, o.stats));
  return kAffirmative;
}

int cmd_check_stable(const Options& o, std::ostream& out) {
  const NormalizedInstance in = json::instance_from_json(read_json_file(o.file));
  const StableVerdict v = stable_bruteforce(in.instance, Budget{o.budget});
  Json doc = json::to_json(in.instance, v);
  if (!in.renaming.empty()) doc["renaming"] = json::renaming_json(in.renaming);
  emit(out, doc);
  return v.stable ? kAffirmative : kNegative;
}

int verdict_exit(const ConsequenceVerdict& v) {
  switch (v.kind) {
    case VerdictKind::Consequence: return kAffirmative;
    case VerdictKind::Countermodel: return kNegative;
    case VerdictKind::InconclusiveAtBound: return kBudgetError;
  }
  return kUsageError;
}

int cmd_check_consequence(const Options& o, std::ostream& out) {
  const Budget budget{o.budget};
  if (!o.file.empty()) {
    if (!o.theta.empty() || !o.phi.empty()) throw UsageError("give either an instance file or --theta/--phi");
    const NormalizedInstance in = json::instance_from_json(read_json_file(o.file));
    const ReductionOutput r = reduce(in.instance);
    const ConsequenceVerdict v = check_consequence_rho(r, budget);
    Json doc = json::to_json(v, r.theta, r.phi);
    doc["e"] = r.e;
    emit(out, doc);
    return verdict_exit(v);
  }
  if (o.theta.empty() || o.phi.empty()) throw UsageError("give an instance file or both --theta and --phi");
  const LukFormula theta = parse_luk(o.theta);
  const LukFormula phi = parse_luk(o.phi);
  const ConsequenceVerdict v = find_countermodel(theta, phi, o.max_denominator, budget);
  Json doc = json::to_json(v, theta, phi);
  doc["coefficient_bound"] = coefficient_bound(theta, phi);
  emit(out, doc);
  return verdict_exit(v);
}

int cmd_estar(const Options& o, std::ostream& out) {
  std::vector<BoolFormula> delta, nabla;
  BoolFormula omega = boolean::var(1);
  if (!o.file.empty()) {
    const Json doc = read_json_file(o.file);
    if (!doc.is_object() || !doc.contains("nabla") || !doc.contains("omega") || !doc["omega"].is_string())
      throw UsageError("estar file needs \"nabla\" (array) and \"omega\" (string)");
    if (doc.contains("delta")) delta = json::parse_formula_list(doc["delta"], "delta");
    nabla = json::parse_formula_list(doc["nabla"], "nabla");
    omega = parse_bool(doc["omega"].get<std::string>());
  } else {
    if (o.omega.empty()) throw UsageError("give an estar file or --omega with --nabla");
    for (const auto& t : o.delta) delta.push_back(parse_bool(t));
    for (const auto& t : o.nabla) nabla.push_back(parse_bool(t));
    omega = parse_bool(o.omega);
  }
  if (nabla.empty()) throw UsageError("nabla must be nonempty");

  const Budget budget{o.budget};
  EStarResult r;
  if (o.via == "bruteforce")
    r = estar(delta, nabla, omega, [&](const StableInstance& j) { return stable_via_bruteforce(j, budget); });
  else
    r = estar(delta, nabla, omega, budget);
  emit(out, json::to_json(r));
  return r.no_entailment() ? kNegative : kAffirmative;
}

int cmd_harness(const Options& o, std::ostream& out, std::ostream& err) {
  HarnessLimits limits{o.limits, Budget{o.budget}};
  const HarnessReport report = equivalence_harness(o.seed, o.trials, limits, [&](const HarnessRecord& r) {
    out << json::to_json(r).dump() << '\n';
  });
  err << "trials " << report.trials << ", stable " << report.stable_count << ", disagreements "
      << report.disagreements.size() << '\n';
  return report.disagreements.empty() ? kAffirmative : kNegative;
}

int fail(std::ostream& out, std::ostream& err, int code, const std::string& kind, const std::string& message,
         std::optional<std::size_t> offset = std::nullopt) {
  Json e{{"kind", kind}, {"message", message}};
  if (offset) e["offset"] = *offset;
  out << Json{{"error", std::move(e)}}.dump() << '\n';
  err << "error: " << message << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable Consequence to Lukasiewicz consequence: reduction and decision procedures",
               "stablecons"};
  app.require_subcommand(1);
  Options o;

  auto formula_options = [&](CLI::App* sub) {
    sub->add_option("--bool", o.bool_text, "boolean formula");
    sub->add_option("--luk", o.luk_text, "Lukasiewicz formula");
  };
  auto budget_option = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "maximum enumeration steps")->check(CLI::PositiveNumber);
  };

  auto* parse = app.add_subcommand("parse", "parse a formula and report its length");
  formula_options(parse);

  auto* eval = app.add_subcommand("eval", "evaluate a formula at a point");
  formula_options(eval);
  eval->add_option("--at", o.at, "assignments VAR=VALUE, e.g. X1=1/3 (repeatable, comma separated)");

  auto* nnf_cmd = app.add_subcommand("nnf", "negation normal form of a boolean formula");
  nnf_cmd->add_option("formula,--bool", o.bool_text, "boolean formula")->required();

  auto* ddagger_cmd = app.add_subcommand("ddagger", "double-dagger transform of a boolean formula");
  ddagger_cmd->add_option("formula,--bool", o.bool_text, "boolean formula")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce an instance to a pair (theta, phi)");
  reduce_cmd->add_option("instance", o.file, "instance JSON file ('-' for stdin)")->required();
  reduce_cmd->add_flag("--stats", o.stats, "report instance length, output length and ratio");

  auto* stable_cmd = app.add_subcommand("check-stable", "decide an instance by brute force");
  stable_cmd->add_option("instance", o.file, "instance JSON file ('-' for stdin)")->required();
  budget_option(stable_cmd);

  auto* cons_cmd = app.add_subcommand("check-consequence", "decide theta |- phi");
  cons_cmd->add_option("instance", o.file, "instance JSON file: decide its reduction exactly");
  cons_cmd->add_option("--theta", o.theta, "premise (Lukasiewicz formula)");
  cons_cmd->add_option("--phi", o.phi, "conclusion (Lukasiewicz formula)");
  cons_cmd->add_option("--max-denominator", o.max_denominator, "denominator bound of the countermodel search")
      ->check(CLI::PositiveNumber);
  budget_option(cons_cmd);

  auto* estar_cmd = app.add_subcommand("estar", "largest number of deletable dubious premises");
  estar_cmd->add_option("file", o.file, "JSON file {\"delta\": [...], \"nabla\": [...], \"omega\": \"...\"}");
  estar_cmd->add_option("--delta", o.delta, "trusted premise (repeatable)");
  estar_cmd->add_option("--nabla", o.nabla, "dubious premise (repeatable)");
  estar_cmd->add_option("--omega", o.omega, "conclusion");
  estar_cmd->add_option("--via", o.via, "stability check")->check(CLI::IsMember({"rho", "bruteforce"}));
  budget_option(estar_cmd);

  auto* harness_cmd = app.add_subcommand("harness", "compare brute force with the reduction on random instances");
  harness_cmd->add_option("--seed", o.seed, "random seed");
  harness_cmd->add_option("--trials", o.trials, "number of random instances");
  harness_cmd->add_option("--max-groups", o.limits.max_groups)->check(CLI::PositiveNumber);
  harness_cmd->add_option("--max-group-size", o.limits.max_group_size)->check(CLI::PositiveNumber);
  harness_cmd->add_option("--max-vars", o.limits.max_variables)->check(CLI::PositiveNumber);
  harness_cmd->add_option("--max-size", o.limits.max_connectives, "connectives per formula");
  budget_option(harness_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    return fail(out, err, kUsageError, "usage", e.what());
  }

  try {
    if (parse->parsed()) return cmd_parse(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (nnf_cmd->parsed()) return cmd_nnf(o, out);
    if (ddagger_cmd->parsed()) return cmd_ddagger(o, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out);
    if (stable_cmd->parsed()) return cmd_check_stable(o, out);
    if (cons_cmd->parsed()) return cmd_check_consequence(o, out);
    if (estar_cmd->parsed()) return cmd_estar(o, out);
    if (harness_cmd->parsed()) return cmd_harness(o, out, err);
  } catch (const ParseError& e) {
    return fail(out, err, kUsageError, "parse", e.what(), e.offset());
  } catch (const UnboundVariableError& e) {
    return fail(out, err, kUsageError, "unbound_variable", e.what());
  } catch (const InvalidInstanceError& e) {
    return fail(out, err, kUsageError, "invalid_instance", e.what());
  } catch (const BudgetExceededError& e) {
    return fail(out, err, kBudgetError, "budget", e.what());
  } catch (const UsageError& e) {
    return fail(out, err, kUsageError, "usage", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(out, err, kUsageError, "json", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(out, err, kUsageError, "usage", e.what());
  }
  return fail(out, err, kUsageError, "usage", "no subcommand given");
}

}  // namespace stablecons::cli
