#include "jordanlab/degcalc/rules.hpp"

#include <cctype>
#include <functional>

namespace jordanlab {

const Tower& RuleResult::get(const std::string& name) const {
  for (const auto& [n, t] : outputs) {
    if (n == name) return t;
  }
  throw UnknownRuleError("rule " + rule_id + " has no output named '" + name + "'");
}

namespace {

struct Args {
  const std::string& id;
  const RuleParams& p;

  const Tower& t(const std::string& name) const {
    auto it = p.values.find(name);
    if (it == p.values.end()) {
      throw MissingParamError("rule " + id + ": missing parameter '" + name + "'");
    }
    return it->second;
  }

  // literal integer parameter (needed where the formula shifts an exponent)
  mpz_class z(const std::string& name) const {
    const Tower& v = t(name);
    if (v->op != TowerOp::Literal) {
      throw BadInputError("rule " + id + ": parameter '" + name + "' must be a literal integer");
    }
    return v->literal;
  }

  GroupType type() const {
    if (!p.type) throw MissingParamError("rule " + id + ": missing parameter 'type'");
    return *p.type;
  }
  std::uint32_t rank() const {
    if (!p.rank) throw MissingParamError("rule " + id + ": missing parameter 'r'");
    return *p.rank;
  }
};

using Builder = std::function<std::vector<std::pair<std::string, Tower>>(const Args&)>;

struct RuleDef {
  RuleInfo info;
  Builder build;
};

Tower two() { return tlit(2); }

// (2*d*D*(iota+1)) ^ (x*(d+1)*d^x)
Tower phi_expr(const Tower& x, const Tower& d, const Tower& D, const Tower& iota) {
  Tower base = tmul({two(), d, D, tsum({iota, tlit(1)})});
  Tower expo = tmul({x, tsum({d, tlit(1)}), tpow(d, x)});
  return tpow(base, expo);
}

const std::vector<RuleDef>& registry() {
  static const std::vector<RuleDef> defs = [] {
    std::vector<RuleDef> v;
    auto add = [&v](std::string id, std::vector<std::string> params, std::string desc, Builder b) {
      v.push_back(RuleDef{RuleInfo{std::move(id), std::move(params), std::move(desc)}, std::move(b)});
    };

    add("R1", {"D1", "D2"}, "degree of an intersection of two varieties", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{{"value", tmul({a.t("D1"), a.t("D2")})}};
    });
    add("R2", {"D", "m", "df"}, "degree of the closure of a morphism image", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{{"value", tmul({a.t("D"), tpow(a.t("m"), a.t("df"))})}};
    });
    add("R3", {"D", "DW", "m", "df"}, "degree of a morphism preimage", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tmul({a.t("D"), a.t("DW"), tpow(a.t("m"), a.t("df"))})}};
    });
    add("R4", {"m", "df", "D"}, "degree of the locus of oversized fibres (df = image dimension, literal >= 1)",
        [](const Args& a) {
          mpz_class df = a.z("df");
          if (df < 1) throw BadInputError("rule R4: df must be >= 1");
          return std::vector<std::pair<std::string, Tower>>{
              {"value", tmul({tpow(a.t("m"), tlit(mpz_class(df - 1))), a.t("D")})}};
        });
    add("R5", {"d", "D"}, "number of members needed to cut an intersection of a family", [](const Args& a) {
      Tower d1 = tsum({a.t("d"), tlit(1)});
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tsum({tlit(1), tmul({d1, tpow(a.t("D"), d1)})})}};
    });
    add("R6", {"d", "D"}, "degree of an intersection of a family of bounded-degree varieties", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tpow(a.t("D"), tsum({a.t("d"), tlit(1)}))}};
    });
    add("R7", {"Dp", "D", "dhat"}, "degree of Y meeting an intersection family", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tmul({a.t("Dp"), tpow(a.t("D"), tsum({a.t("dhat"), tlit(1)}))})}};
    });
    add("R8", {"D"}, "degree of a maximal torus", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{{"value", a.t("D")}};
    });
    add("R9", {"D"}, "degree of a Borel subgroup", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{{"value", a.t("D")}};
    });
    add("R10", {"D", "d"}, "degree of a maximal connected unipotent subgroup", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tmin({a.t("D"), tpow(a.t("d"), a.t("d"))})}};
    });
    add("R11", {"n", "D", "d"}, "degree of the unipotent radical", [](const Args& a) {
      Tower nd = tmul({a.t("n"), a.t("D")});
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tmin({tpow(nd, tsum({a.t("d"), tlit(1)})), tpow(a.t("d"), a.t("d"))})}};
    });
    add("R12", {"d"}, "generators needed to cut a centralizer", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{{"value", tsum({a.t("d"), tlit(1)})}};
    });
    add("R13", {"DV", "dV"}, "escape bound: group size or trapping-subgroup degree", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tpow(a.t("DV"), tsum({a.t("dV"), tlit(1)}))}};
    });
    add("R14", {"n", "Delta", "D", "DH", "d"}, "quantitative bounds for the linearized quotient construction",
        [](const Args& a) {
          Tower n2 = tpow(a.t("n"), tlit(2));
          Tower M = tbinom(tsum({n2, a.t("Delta")}), a.t("Delta"));
          Tower M_simple = tpow(tsum({n2, a.t("Delta")}), tmin({n2, a.t("Delta")}));
          Tower m = tpow(two(), tmul({tlit(2), M}));
          Tower common = tpow(two(), tsum({M, n2, tlit(4)}));
          Tower deg_ghat = tmul({M, common, a.t("Delta"), a.t("D")});
          Tower deg_hhat = tmul({M, common, a.t("Delta"), a.t("DH")});
          Tower d1 = tsum({a.t("d"), tlit(1)});
          Tower deg_q = tmul({tpow(M, d1), tpow(two(), tsum({M, n2, a.t("d"), tlit(5)})),
                              tpow(a.t("Delta"), d1), a.t("D")});
          Tower mdeg_beta = tmul({tlit(2), M, a.t("Delta")});
          return std::vector<std::pair<std::string, Tower>>{
              {"M", M},           {"M_simple_bound", M_simple}, {"m", m},
              {"deg_Ghat", deg_ghat}, {"deg_Hhat", deg_hhat},   {"deg_Q", deg_q},
              {"mdeg_beta", mdeg_beta}};
        });
    add("R15", {"iota", "d"}, "degree of the polynomials cutting the reductive-adjoint kernel subgroup",
        [](const Args& a) {
          return std::vector<std::pair<std::string, Tower>>{
              {"value", tmul({tsum({a.t("iota"), tlit(1)}), tpow(a.t("d"), a.t("d"))})}};
        });
    add("R16", {"type", "r"}, "degree bound for an adjoint realization, refined per type", [](const Args& a) {
      GroupTypeData gd = group_data(a.type(), a.rank());
      return std::vector<std::pair<std::string, Tower>>{
          {"value", gd.adjoint_degree_bound}, {"generic", gd.adjoint_degree_generic}};
    });
    add("R17", {"type", "r"}, "Weyl group order (exact table) and the uniform (2r)^r bound", [](const Args& a) {
      GroupTypeData gd = group_data(a.type(), a.rank());
      Tower r = tlit(std::uint64_t(gd.rank));
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tlit(gd.weyl_order)}, {"crude", tpow(tmul({two(), r}), r)}};
    });
    add("R18", {"r"}, "bound on the weight/root lattice index", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{{"value", tsum({a.t("r"), tlit(1)})}};
    });
    add("R19", {"iota", "d"}, "bounds for the distinguished small representation", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{
          {"mdeg", tsum({a.t("iota"), tlit(1)})}, {"dim", a.t("d")}};
    });
    add("R20", {"iota"}, "maximum degree of the adjoint representation", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{{"value", tsum({a.t("iota"), tlit(1)})}};
    });
    add("R21", {"d", "D", "DV", "dV"}, "dimensional-estimate constant and the smallness threshold",
        [](const Args& a) {
          Tower C = tpow(tmul({two(), a.t("d"), a.t("DV")}), tpow(a.t("d"), a.t("dV")));
          Tower thr = tpow(tmul({two(), a.t("d"), a.t("D")}), tsum({a.t("d"), tlit(1)}));
          return std::vector<std::pair<std::string, Tower>>{{"value", C}, {"threshold", thr}};
        });
    add("R22", {"d", "DV", "dV", "k"}, "k-fold dimensional-estimate constant", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tpow(tmul({two(), a.t("d"), a.t("DV")}), tmul({a.t("k"), tpow(a.t("d"), a.t("dV"))}))}};
    });
    add("R23", {"d", "DV", "k"}, "crude k-fold estimate constant (d literal >= 1)", [](const Args& a) {
      mpz_class d = a.z("d");
      if (d < 1) throw BadInputError("rule R23: d must be >= 1");
      Tower expo = tpow(a.t("d"), tlit(mpz_class(d - 1)));
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tmul({a.t("k"), tpow(tmul({two(), a.t("d"), a.t("DV")}), expo)})}};
    });
    add("R24", {"x", "d", "D", "iota"}, "two-sided centralizer estimate function", [](const Args& a) {
      return std::vector<std::pair<std::string, Tower>>{
          {"value", phi_expr(a.t("x"), a.t("d"), a.t("D"), a.t("iota"))}};
    });
    add("R25", {"d", "D", "r", "n", "iota"}, "size and subgroup-degree thresholds, both strengths",
        [](const Args& a) {
          Tower base = tmul({two(), a.t("d"), a.t("D"), a.t("r"), a.t("n"), a.t("iota")});
          Tower inner = tmul({two(), a.t("d"), a.t("D"), a.t("r"), a.t("iota")});
          Tower d4 = tpow(a.t("d"), tlit(4));
          Tower a1 = tpow(base, tpow(inner, tmul({tlit(10), d4})));
          Tower b1 = tpow(base, tpow(inner, tmul({tlit(11), d4})));
          Tower a2 = tpow(tmul({two(), a.t("d"), a.t("D")}), tmul({tlit(4), a.t("d")}));
          Tower b2 = tpow(tmul({two(), a.t("d"), a.t("D"), a.t("r")}),
                          tmul({tlit(4), tpow(a.t("d"), tlit(2))}));
          return std::vector<std::pair<std::string, Tower>>{
              {"A1", a1}, {"B1", b1}, {"A2", a2}, {"B2", b2}};
        });
    add("R26", {"d", "n", "iota", "r", "D"}, "degree growth of one descent step", [](const Args& a) {
      Tower base = tmul({two(), a.t("d"), a.t("n"), a.t("iota")});
      Tower expo = tsum({tmul({tpow(two(), tlit(20)), tpow(a.t("d"), tlit(4)), tpow(a.t("r"), tlit(2))}),
                         tmul({tlit(2), a.t("d"), tpow(a.t("n"), tlit(2))})});
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tmul({tpow(base, tpow(base, expo)), tpow(a.t("D"), tsum({a.t("d"), tlit(1)}))})}};
    });
    add("R27", {"n"}, "final index bound J'(n)", [](const Args& a) {
      Tower inner = tmul({tpow(two(), tlit(23)), tpow(a.t("n"), tlit(10))});
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tpow(a.t("n"), tpow(a.t("n"), inner))}};
    });
    add("R28", {"d", "l", "DV", "j"}, "factor degrees in the inductive product step (d, l literal >= 1)",
        [](const Args& a) {
          mpz_class d = a.z("d");
          if (d < 1) throw BadInputError("rule R28: d must be >= 1");
          Tower fj = tmul({tpow(two(), a.t("d")), tpow(a.t("l"), tlit(mpz_class(d - 1))),
                           tpow(a.t("DV"), tsum({a.t("j"), tlit(1)}))});
          Tower e = tmul({tpow(tmul({two(), a.t("l")}), a.t("d")), tpow(a.t("DV"), a.t("l"))});
          return std::vector<std::pair<std::string, Tower>>{{"F_j", fj}, {"E", e}};
        });
    add("R29", {"q", "d"}, "order bounds for the fixed-point group (split form, q literal >= 2)",
        [](const Args& a) {
          mpz_class q = a.z("q");
          if (q < 2) throw BadInputError("rule R29: q must be >= 2");
          return std::vector<std::pair<std::string, Tower>>{
              {"lower", tpow(tlit(mpz_class(q - 1)), a.t("d"))},
              {"upper", tpow(a.t("q"), a.t("d"))}};
        });
    add("R30", {"d", "D", "iota"}, "index-chain constant dominating the core factorial", [](const Args& a) {
      Tower base = tmul({two(), a.t("d"), a.t("D"), a.t("iota")});
      return std::vector<std::pair<std::string, Tower>>{
          {"value", tpow(base, tpow(base, tmul({tlit(5), tpow(a.t("d"), tlit(4))})))}};
    });
    return v;
  }();
  return defs;
}

}  // namespace

std::vector<RuleInfo> rule_registry() {
  std::vector<RuleInfo> out;
  for (const auto& d : registry()) out.push_back(d.info);
  return out;
}

const RuleInfo& rule_info(const std::string& id) {
  for (const auto& d : registry()) {
    if (d.info.id == id) return d.info;
  }
  throw UnknownRuleError("unknown rule '" + id + "'");
}

RuleResult eval_rule(const std::string& id, const RuleParams& params) {
  for (const auto& d : registry()) {
    if (d.info.id != id) continue;
    Args a{d.info.id, params};
    RuleResult r;
    r.rule_id = id;
    r.outputs = d.build(a);
    return r;
  }
  throw UnknownRuleError("unknown rule '" + id + "'");
}

RuleParams parse_rule_params(const std::vector<std::string>& kvs) {
  RuleParams out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw BadInputError("expected key=value, got '" + kv + "'");
    std::string key = kv.substr(0, eq);
    std::string val = kv.substr(eq + 1);
    if (key == "type") {
      out.type = group_type_from_string(val);
      // "A2" etc. also pins the rank
      if (val.size() > 1 && std::isdigit(static_cast<unsigned char>(val[1]))) {
        out.rank = static_cast<std::uint32_t>(std::stoul(val.substr(1)));
      }
      continue;
    }
    Tower expr = parse_tower(val);
    if (key == "r" && expr->op == TowerOp::Literal && expr->literal.fits_ulong_p()) {
      out.rank = static_cast<std::uint32_t>(expr->literal.get_ui());
    }
    out.values[key] = expr;
  }
  return out;
}

}  // namespace jordanlab
