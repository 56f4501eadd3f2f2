#pragma once

#include <string>
#include <vector>

#include "jordanlab/degcalc/rules.hpp"

namespace jordanlab {

enum class AuditVerdict { PASS, FAIL, UNDECIDED, SKIPPED };

std::string audit_verdict_name(AuditVerdict v);

struct AuditResult {
  std::string check;     // "AUD2"
  std::string params;    // instantiation label, e.g. "A1: d=3 D=16 r=1 n=3 iota=3"
  AuditVerdict verdict;
  std::string lhs;       // serialized tower expressions of the instantiated inequality
  std::string rhs;
  std::string relation;  // "<", "<=", ">"
};

struct AuditOptions {
  std::uint32_t max_rank = 4;        // adjoint-type grid
  std::uint32_t descent_min_n = 2;   // AUD4 range
  std::uint32_t descent_max_n = 4;
  std::uint32_t factorial_min_n = 2;  // AUD5 range (n = 1 reported SKIPPED)
  std::uint32_t factorial_max_n = 100;
  CompareOptions cmp{};
};

std::vector<std::string> audit_ids();  // AUD1..AUD6

// Run one audit (or all of them for id == "ALL"). Failures carry the
// instantiated inequality; UNDECIDED is reported, never raised.
std::vector<AuditResult> run_audit(const std::string& id, const AuditOptions& opts = {});

}  // namespace jordanlab
