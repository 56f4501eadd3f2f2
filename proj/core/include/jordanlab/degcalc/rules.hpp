#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jordanlab/degcalc/group_data.hpp"
#include "jordanlab/towernum/tower.hpp"

namespace jordanlab {

// One evaluated rule: a list of named bound expressions. Single-output rules
// use the name "value".
struct RuleResult {
  std::string rule_id;
  std::vector<std::pair<std::string, Tower>> outputs;

  const Tower& get(const std::string& name) const;
  const Tower& value() const { return get("value"); }
};

struct RuleParams {
  std::map<std::string, Tower> values;
  std::optional<GroupType> type;
  std::optional<std::uint32_t> rank;
};

struct RuleInfo {
  std::string id;
  std::vector<std::string> params;  // required parameter names
  std::string description;          // what the rule bounds
};

// The registry is the single source of truth for every quantitative rule the
// toolkit evaluates; audits and reports instantiate rules only through here.
std::vector<RuleInfo> rule_registry();
const RuleInfo& rule_info(const std::string& id);  // UnknownRuleError if absent

// Syntactic instantiation of a rule at the given parameters; integer
// parameters are substituted as-is, no rounding. MissingParamError when a
// required parameter is absent; UnknownRuleError for unknown ids.
RuleResult eval_rule(const std::string& id, const RuleParams& params);

// Convenience: parse "k=v" strings (v is a tower expression; "type"/"r" have
// dedicated handling for the table-driven rules).
RuleParams parse_rule_params(const std::vector<std::string>& kvs);

}  // namespace jordanlab
