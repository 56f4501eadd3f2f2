#include "jordanlab/towernum/tower.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace jordanlab {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t hash_mpz(const mpz_class& v) {
  std::size_t h = mpz_sgn(v.get_mpz_t());
  std::size_t n = mpz_size(v.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) h = hash_combine(h, mpz_getlimbn(v.get_mpz_t(), i));
  return h;
}

}  // namespace

Tower TowerExpr::make_literal(const mpz_class& v) {
  if (v < 0) throw BadInputError("tower literals are nonnegative");
  auto node = std::shared_ptr<TowerExpr>(new TowerExpr());
  node->op = TowerOp::Literal;
  node->literal = v;
  node->hash = hash_combine(0x11, hash_mpz(v));
  return node;
}

Tower TowerExpr::make_var(const std::string& name) {
  auto node = std::shared_ptr<TowerExpr>(new TowerExpr());
  node->op = TowerOp::Var;
  node->name = name;
  node->hash = hash_combine(0x22, std::hash<std::string>{}(name));
  return node;
}

Tower TowerExpr::make(TowerOp op, std::vector<Tower> children) {
  auto node = std::shared_ptr<TowerExpr>(new TowerExpr());
  node->op = op;
  node->children = std::move(children);
  std::size_t h = hash_combine(0x33, static_cast<std::size_t>(op));
  for (const auto& c : node->children) h = hash_combine(h, c->hash);
  node->hash = h;
  return node;
}

Tower tlit(const mpz_class& v) { return TowerExpr::make_literal(v); }
Tower tlit(std::uint64_t v) { return TowerExpr::make_literal(mpz_class(static_cast<unsigned long>(v))); }
Tower tvar(const std::string& name) { return TowerExpr::make_var(name); }
Tower tsum(std::vector<Tower> xs) { return TowerExpr::make(TowerOp::Sum, std::move(xs)); }
Tower tmul(std::vector<Tower> xs) { return TowerExpr::make(TowerOp::Product, std::move(xs)); }
Tower tpow(Tower base, Tower exp) { return TowerExpr::make(TowerOp::Power, {std::move(base), std::move(exp)}); }
Tower tfact(Tower x) { return TowerExpr::make(TowerOp::Factorial, {std::move(x)}); }
Tower tbinom(Tower n, Tower k) { return TowerExpr::make(TowerOp::Binomial, {std::move(n), std::move(k)}); }
Tower tmin(std::vector<Tower> xs) { return TowerExpr::make(TowerOp::Min, std::move(xs)); }
Tower tmax(std::vector<Tower> xs) { return TowerExpr::make(TowerOp::Max, std::move(xs)); }

bool tower_equal(const Tower& a, const Tower& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->op != b->op) return false;
  switch (a->op) {
    case TowerOp::Literal:
      return a->literal == b->literal;
    case TowerOp::Var:
      return a->name == b->name;
    default: {
      if (a->children.size() != b->children.size()) return false;
      for (std::size_t i = 0; i < a->children.size(); ++i) {
        if (!tower_equal(a->children[i], b->children[i])) return false;
      }
      return true;
    }
  }
}

Tower substitute(const Tower& t, const std::map<std::string, Tower>& env) {
  switch (t->op) {
    case TowerOp::Literal:
      return t;
    case TowerOp::Var: {
      auto it = env.find(t->name);
      return it == env.end() ? t : it->second;
    }
    default: {
      std::vector<Tower> kids;
      kids.reserve(t->children.size());
      bool changed = false;
      for (const auto& c : t->children) {
        Tower nc = substitute(c, env);
        changed = changed || nc.get() != c.get();
        kids.push_back(std::move(nc));
      }
      if (!changed) return t;
      return TowerExpr::make(t->op, std::move(kids));
    }
  }
}

std::vector<std::string> free_vars(const Tower& t) {
  std::set<std::string> names;
  std::function<void(const Tower&)> walk = [&](const Tower& x) {
    if (x->op == TowerOp::Var) {
      names.insert(x->name);
    } else {
      for (const auto& c : x->children) walk(c);
    }
  };
  walk(t);
  return {names.begin(), names.end()};
}

namespace {

constexpr std::uint64_t kInfBits = UINT64_MAX;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > kInfBits - b) ? kInfBits : a + b;
}
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kInfBits / b) return kInfBits;
  return a * b;
}

// Saturating upper bound for the value itself (not bits); kInfBits when huge.
std::uint64_t value_ub(const Tower& t);

std::uint64_t bits_ub(const Tower& t) {
  switch (t->op) {
    case TowerOp::Literal:
      return t->literal == 0 ? 1 : mpz_sizeinbase(t->literal.get_mpz_t(), 2);
    case TowerOp::Var:
      throw MissingParamError("unbound variable '" + t->name + "' in tower expression");
    case TowerOp::Sum: {
      std::uint64_t m = 1;
      for (const auto& c : t->children) m = std::max(m, bits_ub(c));
      return sat_add(m, 64);  // at most 2^64 summands
    }
    case TowerOp::Product: {
      std::uint64_t s = 1;
      for (const auto& c : t->children) s = sat_add(s, bits_ub(c));
      return s;
    }
    case TowerOp::Power: {
      std::uint64_t e = value_ub(t->children[1]);
      return sat_mul(bits_ub(t->children[0]), e == 0 ? 1 : e);
    }
    case TowerOp::Factorial: {
      std::uint64_t v = value_ub(t->children[0]);
      if (v == kInfBits) return kInfBits;
      // v! <= v^v
      std::uint64_t lg = 1;
      while ((std::uint64_t(1) << lg) < std::max<std::uint64_t>(v, 2) && lg < 63) ++lg;
      return sat_add(sat_mul(v, lg), 1);
    }
    case TowerOp::Binomial: {
      std::uint64_t k = value_ub(t->children[1]);
      return sat_add(sat_mul(bits_ub(t->children[0]), k == 0 ? 1 : k), 1);
    }
    case TowerOp::Min: {
      std::uint64_t m = kInfBits;
      for (const auto& c : t->children) m = std::min(m, bits_ub(c));
      return m;
    }
    case TowerOp::Max: {
      std::uint64_t m = 1;
      for (const auto& c : t->children) m = std::max(m, bits_ub(c));
      return m;
    }
  }
  return kInfBits;
}

std::uint64_t value_ub(const Tower& t) {
  std::uint64_t b = bits_ub(t);
  if (b >= 63) return kInfBits;
  if (t->op == TowerOp::Literal) return t->literal.get_ui();
  return (std::uint64_t(1) << (b + 1));  // 2^(bits+1) bounds any value of that bit size
}

mpz_class eval_rec(const Tower& t, std::uint64_t bit_cap) {
  switch (t->op) {
    case TowerOp::Literal:
      return t->literal;
    case TowerOp::Var:
      throw MissingParamError("unbound variable '" + t->name + "' in tower expression");
    case TowerOp::Sum: {
      mpz_class acc = 0;
      for (const auto& c : t->children) acc += eval_rec(c, bit_cap);
      return acc;
    }
    case TowerOp::Product: {
      mpz_class acc = 1;
      for (const auto& c : t->children) acc *= eval_rec(c, bit_cap);
      return acc;
    }
    case TowerOp::Power: {
      mpz_class b = eval_rec(t->children[0], bit_cap);
      mpz_class e = eval_rec(t->children[1], bit_cap);
      if (!e.fits_ulong_p()) throw TooLargeError("power exponent does not fit a machine word");
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e.get_ui());
      return r;
    }
    case TowerOp::Factorial: {
      mpz_class x = eval_rec(t->children[0], bit_cap);
      if (!x.fits_ulong_p()) throw TooLargeError("factorial argument does not fit a machine word");
      mpz_class r;
      mpz_fac_ui(r.get_mpz_t(), x.get_ui());
      return r;
    }
    case TowerOp::Binomial: {
      mpz_class n = eval_rec(t->children[0], bit_cap);
      mpz_class k = eval_rec(t->children[1], bit_cap);
      if (k > n) return 0;
      if (!k.fits_ulong_p()) throw TooLargeError("binomial k does not fit a machine word");
      mpz_class r;
      mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
      return r;
    }
    case TowerOp::Min: {
      mpz_class m = eval_rec(t->children[0], bit_cap);
      for (std::size_t i = 1; i < t->children.size(); ++i) m = std::min(m, eval_rec(t->children[i], bit_cap));
      return m;
    }
    case TowerOp::Max: {
      mpz_class m = eval_rec(t->children[0], bit_cap);
      for (std::size_t i = 1; i < t->children.size(); ++i) m = std::max(m, eval_rec(t->children[i], bit_cap));
      return m;
    }
  }
  throw Error("unreachable tower op");
}

}  // namespace

std::uint64_t bits_estimate(const Tower& t) { return bits_ub(t); }

mpz_class eval_exact(const Tower& t, std::uint64_t bit_cap) {
  std::uint64_t est = bits_ub(t);
  if (est > bit_cap) throw TooLargeError("estimated bit size " +
                                         (est == kInfBits ? std::string("(huge)") : std::to_string(est)) +
                                         " exceeds cap " + std::to_string(bit_cap));
  return eval_rec(t, bit_cap);
}

}  // namespace jordanlab
