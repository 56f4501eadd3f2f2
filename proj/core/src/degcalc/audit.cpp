#include "jordanlab/degcalc/audit.hpp"

#include <sstream>

namespace jordanlab {

std::string audit_verdict_name(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::PASS: return "PASS";
    case AuditVerdict::FAIL: return "FAIL";
    case AuditVerdict::UNDECIDED: return "UNDECIDED";
    case AuditVerdict::SKIPPED: return "SKIPPED";
  }
  return "?";
}

namespace {

// Grid point: an adjoint type realized inside GL_d, so the ambient matrix
// size and the inversion degree are both instantiated at d.
struct GridPoint {
  GroupTypeData gd;
  Tower d, D, r, n, iota;
  std::string label;
};

std::vector<GridPoint> default_grid(std::uint32_t max_rank) {
  std::vector<GridPoint> out;
  for (const auto& gd : group_data_up_to_rank(max_rank)) {
    GridPoint gp;
    gp.gd = gd;
    gp.d = tlit(gd.dim);
    gp.D = gd.adjoint_degree_bound;
    gp.r = tlit(std::uint64_t(gd.rank));
    gp.n = tlit(gd.dim);
    gp.iota = tlit(gd.dim);
    std::ostringstream os;
    os << group_type_to_string(gd.type, gd.rank) << ": d=" << gd.dim
       << " r=" << gd.rank << " n=" << gd.dim << " iota=" << gd.dim;
    gp.label = os.str();
    out.push_back(gp);
  }
  return out;
}

AuditResult check(const std::string& id, const std::string& label, const Tower& lhs,
                  const std::string& rel, const Tower& rhs, const CompareOptions& cmp_opts) {
  AuditResult r;
  r.check = id;
  r.params = label;
  r.lhs = to_text(lhs);
  r.rhs = to_text(rhs);
  r.relation = rel;
  Ordering o = compare(lhs, rhs, cmp_opts);
  bool ok;
  if (o == Ordering::UNDECIDED) {
    r.verdict = AuditVerdict::UNDECIDED;
    return r;
  }
  if (rel == "<") {
    ok = o == Ordering::LT;
  } else if (rel == "<=") {
    ok = o == Ordering::LT || o == Ordering::EQ;
  } else if (rel == ">") {
    ok = o == Ordering::GT;
  } else {
    ok = o == Ordering::GT || o == Ordering::EQ;
  }
  r.verdict = ok ? AuditVerdict::PASS : AuditVerdict::FAIL;
  return r;
}

RuleParams grid_params(const GridPoint& g) {
  RuleParams p;
  p.values["d"] = g.d;
  p.values["D"] = g.D;
  p.values["r"] = g.r;
  p.values["n"] = g.n;
  p.values["iota"] = g.iota;
  return p;
}

Tower phi_at(const GridPoint& g, std::uint64_t x) {
  RuleParams p = grid_params(g);
  p.values["x"] = tlit(x);
  return eval_rule("R24", p).value();
}

// AUD1: the stronger size threshold strictly dominates the weaker one.
void aud1(std::vector<AuditResult>& out, const AuditOptions& opts) {
  for (const auto& g : default_grid(opts.max_rank)) {
    RuleResult thr = eval_rule("R25", grid_params(g));
    out.push_back(check("AUD1", g.label, thr.get("B1"), ">", thr.get("A1"), opts.cmp));
  }
}

// AUD2: the size threshold dominates phi(d-1)^(5d), the margin the
// field-finding step consumes.
void aud2(std::vector<AuditResult>& out, const AuditOptions& opts) {
  for (const auto& g : default_grid(opts.max_rank)) {
    RuleResult thr = eval_rule("R25", grid_params(g));
    Tower phi_dm1 = phi_at(g, g.gd.dim - 1);
    Tower rhs = tpow(phi_dm1, tmul({tlit(5), g.d}));
    out.push_back(check("AUD2", g.label, thr.get("A1"), ">", rhs, opts.cmp));
  }
}

// AUD3: the factorial of the index bound is dominated by the closed-form
// index-chain constant.
void aud3(std::vector<AuditResult>& out, const AuditOptions& opts) {
  for (const auto& g : default_grid(opts.max_rank)) {
    // (phi(2)^d)! with the split form dim(V) = 1; the base expands to
    // (2dD(iota+1))^(2(d+1)d^3)
    Tower base = tmul({tlit(2), g.d, g.D, tsum({g.iota, tlit(1)})});
    Tower expo = tmul({tlit(2), tsum({g.d, tlit(1)}), tpow(g.d, tlit(3))});
    Tower lhs = tfact(tpow(base, expo));
    RuleParams p = grid_params(g);
    Tower rhs = eval_rule("R30", p).value();
    out.push_back(check("AUD3", g.label, lhs, "<=", rhs, opts.cmp));
  }
}

// AUD4: descent assembly. Iterate the one-step degree growth d times from
// the GL_n starting data and compare against the closed-form end bounds.
void aud4(std::vector<AuditResult>& out, const AuditOptions& opts) {
  for (std::uint32_t n = opts.descent_min_n; n <= opts.descent_max_n; ++n) {
    const std::uint64_t d = std::uint64_t(n) * n;
    RuleParams p;
    p.values["d"] = tlit(d);
    p.values["n"] = tlit(std::uint64_t(n));
    p.values["iota"] = tlit(std::uint64_t(n));
    p.values["r"] = tlit(std::uint64_t(n));
    Tower deg = tlit(std::uint64_t(n) + 1);  // ambient group degree at the start
    for (std::uint64_t step = 0; step < d; ++step) {
      p.values["D"] = deg;
      deg = eval_rule("R26", p).value();
    }
    // last-step degree <= n^(n^((2^23-1) n^10))
    Tower inner = tmul({tlit((mpz_class(1) << 23) - 1), tpow(tlit(std::uint64_t(n)), tlit(10))});
    Tower last_bound = tpow(tlit(std::uint64_t(n)), tpow(tlit(std::uint64_t(n)), inner));
    std::string label = "n=" + std::to_string(n);
    out.push_back(check("AUD4", label + " (chain)", deg, "<=", last_bound, opts.cmp));
    // deg * (r+1)^d <= J'(n)
    Tower final_lhs = tmul({last_bound, tpow(tlit(std::uint64_t(n) + 1), tlit(d))});
    RuleParams pj;
    pj.values["n"] = tlit(std::uint64_t(n));
    Tower jn = eval_rule("R27", pj).value();
    out.push_back(check("AUD4", label + " (assembly)", final_lhs, "<=", jn, opts.cmp));
  }
}

// AUD5: the CFSG-based reference constant (n+2)! stays below J'(n).
void aud5(std::vector<AuditResult>& out, const AuditOptions& opts) {
  {
    AuditResult sk;
    sk.check = "AUD5";
    sk.params = "n=1";
    sk.verdict = AuditVerdict::SKIPPED;
    sk.lhs = "fact(3)";
    sk.rhs = "pow(1, pow(1, mul(pow(2, 23), pow(1, 10))))";
    sk.relation = "<";
    out.push_back(sk);  // J'(1) = 1; the factorial comparison only applies from n = 2
  }
  for (std::uint32_t n = opts.factorial_min_n; n <= opts.factorial_max_n; ++n) {
    Tower lhs = tfact(tlit(std::uint64_t(n) + 2));
    RuleParams p;
    p.values["n"] = tlit(std::uint64_t(n));
    Tower rhs = eval_rule("R27", p).value();
    out.push_back(check("AUD5", "n=" + std::to_string(n), lhs, "<", rhs, opts.cmp));
  }
}

// AUD6: the composed projection degree chain collapses into its closed form.
void aud6(std::vector<AuditResult>& out, const AuditOptions& opts) {
  for (const auto& g : default_grid(opts.max_rank)) {
    Tower dd = tpow(g.d, g.d);
    Tower i1dd = tmul({tsum({g.iota, tlit(1)}), dd});
    Tower n2 = tpow(g.n, tlit(2));
    Tower core = tpow(tsum({n2, i1dd}), n2);
    Tower lhs = tmul({tlit(2), core, i1dd,
                      tsum({tpow(tlit(2), tmul({tlit(2), core})), tlit(1)})});
    Tower base = tmul({tlit(2), g.d, g.n, g.iota});
    Tower rhs = tpow(base, tpow(base, tmul({tlit(2), g.d, n2})));
    out.push_back(check("AUD6", g.label, lhs, "<=", rhs, opts.cmp));
  }
}

}  // namespace

std::vector<std::string> audit_ids() { return {"AUD1", "AUD2", "AUD3", "AUD4", "AUD5", "AUD6"}; }

std::vector<AuditResult> run_audit(const std::string& id, const AuditOptions& opts) {
  std::vector<AuditResult> out;
  bool all = (id == "ALL");
  bool known = all;
  if (all || id == "AUD1") { aud1(out, opts); known = true; }
  if (all || id == "AUD2") { aud2(out, opts); known = true; }
  if (all || id == "AUD3") { aud3(out, opts); known = true; }
  if (all || id == "AUD4") { aud4(out, opts); known = true; }
  if (all || id == "AUD5") { aud5(out, opts); known = true; }
  if (all || id == "AUD6") { aud6(out, opts); known = true; }
  if (!known) throw UnknownRuleError("unknown audit '" + id + "'");
  return out;
}

}  // namespace jordanlab
