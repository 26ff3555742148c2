#ifndef STABLECONS_JSON_IO_HPP
#define STABLECONS_JSON_IO_HPP

// JSON documents exchanged by the command line tool.
//
//   instance   {"n": 2, "groups": [{"formulas": ["X1", "~X1 \/ X2"], "delete": 1}]}
//   reduction  {"e": 2, "theta": "...", "phi": "...", "stats": {...}, "renaming": {"X3": "X2"}}
//   valuation  {"X1": "2/3", "X2": "1/3"}
//
// Formulas travel as text in the ASCII syntax of parse.hpp, rationals as
// "p/q" strings. Output objects keep insertion order.

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stablecons/decision.hpp"
#include "stablecons/errors.hpp"
#include "stablecons/parse.hpp"
#include "stablecons/reduction.hpp"
#include "stablecons/semantics.hpp"

namespace stablecons::json {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw InvalidInstanceError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

inline std::uint32_t as_count(const Json& value, const char* what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0 ||
      value.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max())
    throw InvalidInstanceError(std::string(what) + " must be a nonnegative integer");
  return value.get<std::uint32_t>();
}

}  // namespace detail

inline Json formula_list(const std::vector<BoolFormula>& formulas) {
  Json out = Json::array();
  for (const auto& f : formulas) out.push_back(to_string(f));
  return out;
}

inline std::vector<BoolFormula> parse_formula_list(const Json& list, const std::string& where) {
  if (!list.is_array()) throw InvalidInstanceError(where + " must be an array of formula strings");
  std::vector<BoolFormula> out;
  for (std::size_t j = 0; j < list.size(); ++j) {
    if (!list[j].is_string()) throw InvalidInstanceError(where + "[" + std::to_string(j) + "] must be a string");
    try {
      out.push_back(parse_bool(list[j].get<std::string>()));
    } catch (const ParseError& e) {
      throw ParseError(where + "[" + std::to_string(j) + "]: " + e.detail(), e.offset());
    }
  }
  return out;
}

inline Json to_json(const StableInstance& instance) {
  Json groups = Json::array();
  for (const auto& g : instance.groups())
    groups.push_back(Json{{"formulas", formula_list(g.formulas)}, {"delete", g.delete_count}});
  return Json{{"n", instance.n()}, {"groups", std::move(groups)}};
}

/// Reads an instance. If the formulas do not use exactly X_1..X_n (gaps,
/// or indices beyond the declared n) the variables are renumbered and the
/// renaming is returned alongside.
inline NormalizedInstance instance_from_json(const Json& doc) {
  const std::uint32_t n = detail::as_count(detail::require(doc, "n"), "\"n\"");
  const Json& groups_json = detail::require(doc, "groups");
  if (!groups_json.is_array()) throw InvalidInstanceError("\"groups\" must be an array");

  std::vector<FormulaGroup> groups;
  for (std::size_t i = 0; i < groups_json.size(); ++i) {
    const std::string where = "groups[" + std::to_string(i) + "]";
    FormulaGroup g;
    g.formulas = parse_formula_list(detail::require(groups_json[i], "formulas"), where + ".formulas");
    g.delete_count = groups_json[i].contains("delete")
                         ? detail::as_count(groups_json[i].at("delete"), (where + ".delete").c_str())
                         : 0;
    groups.push_back(std::move(g));
  }
  if (groups.empty()) throw InvalidInstanceError("instance needs at least one group");

  std::vector<VarId> used;
  for (const auto& g : groups)
    for (const auto& f : g.formulas)
      for (VarId v : variables(f)) used.push_back(v);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  bool exact = used.size() == n;
  for (std::size_t i = 0; exact && i < used.size(); ++i) exact = used[i].index() == i + 1;

  if (exact) return {StableInstance(n, std::move(groups)), {}};
  return normalize_variables(groups);
}

inline Json to_json(const Valuation& x) {
  Json out = Json::object();
  for (const auto& [var, value] : x.entries()) out[to_string(var)] = value.to_string();
  return out;
}

inline Json to_json(const BoolAssignment& w) {
  Json out = Json::object();
  for (std::uint32_t i = 1; i <= w.size(); ++i) out["X" + std::to_string(i)] = w.at(VarId(i)) ? "1" : "0";
  return out;
}

inline Json renaming_json(const VariableRenaming& renaming) {
  Json out = Json::object();
  for (const auto& [from, to] : renaming) out["X" + std::to_string(from)] = "X" + std::to_string(to);
  return out;
}

inline Json to_json(const ReductionOutput& r, bool with_stats) {
  Json out{{"e", r.e}, {"theta", to_string(r.theta)}, {"phi", to_string(r.phi)}};
  if (with_stats) {
    out["stats"] = Json{{"n", r.stats.n},
                        {"instance_length", r.stats.instance_length},
                        {"output_length", r.stats.output_length},
                        {"ratio", r.stats.ratio.str()}};
  }
  if (!r.renaming.empty()) out["renaming"] = renaming_json(r.renaming);
  return out;
}

inline Json to_json(const StableInstance& instance, const StableVerdict& v) {
  Json out{{"stable", v.stable}};
  if (v.counterexample) {
    Json deleted = Json::array();
    for (std::size_t i = 0; i < v.counterexample->deleted.size(); ++i) {
      Json group = Json::array();
      for (std::size_t j : v.counterexample->deleted[i])
        group.push_back(to_string(instance.groups()[i].formulas[j]));
      deleted.push_back(std::move(group));
    }
    out["counterexample"] = Json{{"deleted", std::move(deleted)},
                                 {"assignment", to_json(v.counterexample->assignment)}};
  }
  return out;
}

inline const char* verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Consequence: return "consequence";
    case VerdictKind::Countermodel: return "countermodel";
    case VerdictKind::InconclusiveAtBound: return "inconclusive";
  }
  return "unknown";
}

/// theta and phi are used to report their values at a witness.
inline Json to_json(const ConsequenceVerdict& v, const LukFormula& theta, const LukFormula& phi) {
  Json out{{"verdict", verdict_name(v.kind)}};
  switch (v.kind) {
    case VerdictKind::Consequence:
      out["certified"] = v.certified;
      break;
    case VerdictKind::Countermodel:
      out["witness"] = to_json(*v.witness);
      out["theta_value"] = eval_luk(theta, *v.witness).to_string();
      out["phi_value"] = eval_luk(phi, *v.witness).to_string();
      break;
    case VerdictKind::InconclusiveAtBound:
      out["bound"] = v.bound;
      break;
  }
  return out;
}

inline Json to_json(const EStarResult& r) {
  Json out = Json::object();
  if (r.e_star) {
    out["e_star"] = *r.e_star;
    out["fraction"] = BigRational(BigInt(*r.e_star), BigInt(r.nabla_size)).str();
  } else {
    out["e_star"] = nullptr;
    out["no_entailment"] = true;
  }
  out["nabla_size"] = r.nabla_size;
  out["checks_performed"] = r.checks_performed;
  return out;
}

inline Json to_json(const HarnessRecord& r) {
  return Json{{"trial", r.trial},
              {"instance", to_json(r.instance)},
              {"stable", r.stable},
              {"consequence", r.consequence},
              {"agree", r.agree()}};
}

}  // namespace stablecons::json

#endif  // STABLECONS_JSON_IO_HPP
