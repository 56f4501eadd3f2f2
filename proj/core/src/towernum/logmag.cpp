#include <algorithm>
#include <unordered_map>
#include <vector>

#include "jordanlab/towernum/tower.hpp"

// Sound comparison of tower expressions via iterated-logarithm intervals.
//
// A magnitude is (h, [lo, hi]) with the meaning log2^h(value) in [lo, hi];
// h = 0 brackets the value itself. Heights >= 1 keep lo >= 0, so the value is
// >= 1 at every level and further logs stay real. All widening steps below
// only ever widen, so LT/GT verdicts are never wrong; when bounds cannot be
// formed we bail out to UNDECIDED rather than guess.

namespace jordanlab {

namespace {

struct Undecidable {};

const mpq_class& window() {
  static const mpq_class w = [] {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 2, 192);
    return mpq_class(t);
  }();
  return w;
}

struct QI {
  mpq_class lo, hi;
  bool lo_ninf = false;  // lower bound unknown (treated as -infinity)
};

struct Mag {
  int h = 0;
  QI iv;
  bool exact() const { return h == 0 && !iv.lo_ninf && iv.lo == iv.hi; }
};

// ---- rational log2 brackets ----

// floor/ceil bracket of log2 of an integer n >= 1 with `prec` fractional bits.
QI lg2_int(const mpz_class& n, int prec) {
  if (n == 1) return {mpq_class(0), mpq_class(0), false};
  long b = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
  auto frac_bits = [&](bool round_up) -> mpq_class {
    // fixed-point mantissa m/2^prec in [1,2)
    mpz_class m = n << prec;
    mpz_class q;
    if (round_up) {
      mpz_cdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(b));
    } else {
      mpz_fdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(b));
    }
    mpz_class one_shift = mpz_class(1) << prec;
    mpz_class two_shift = one_shift << 1;
    mpq_class frac = 0;
    mpq_class bitval(1, 2);
    long extra = 0;
    if (q >= two_shift) {  // mantissa rounded up to exactly 2
      extra = 1;
      q = one_shift;
    }
    for (int i = 0; i < prec; ++i) {
      mpz_class sq = q * q;
      if (round_up) {
        mpz_cdiv_q_2exp(q.get_mpz_t(), sq.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
      } else {
        mpz_fdiv_q_2exp(q.get_mpz_t(), sq.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
      }
      if (q >= two_shift) {
        frac += bitval;
        mpz_class half;
        if (round_up) {
          mpz_cdiv_q_2exp(half.get_mpz_t(), q.get_mpz_t(), 1);
        } else {
          mpz_fdiv_q_2exp(half.get_mpz_t(), q.get_mpz_t(), 1);
        }
        q = half;
      }
      bitval /= 2;
    }
    return mpq_class(extra) + frac;
  };
  mpq_class lo = mpq_class(b) + frac_bits(false);
  mpq_class slack(4, 1);
  slack /= (mpz_class(1) << prec);
  mpq_class hi = mpq_class(b) + frac_bits(true) + slack;
  return {lo, hi, false};
}

// log2 of a positive rational.
QI lg2_rat(const mpq_class& v, int prec) {
  if (v <= 0) throw Undecidable{};
  mpz_class num = v.get_num(), den = v.get_den();
  QI ln = lg2_int(num, prec);
  QI ld = lg2_int(den, prec);
  return {ln.lo - ld.hi, ln.hi - ld.lo, false};
}

struct Ctx {
  int prec;
  int max_height;
  std::uint64_t exact_bit_cap;
  std::unordered_map<const TowerExpr*, Mag> memo;
};

void normalize(Mag& m, Ctx& ctx) {
  while (!m.iv.lo_ninf && m.iv.hi > window()) {
    if (m.iv.lo < 1) throw Undecidable{};
    if (m.h + 1 > ctx.max_height) throw Undecidable{};
    QI lo_l = lg2_rat(m.iv.lo, ctx.prec);
    QI hi_l = lg2_rat(m.iv.hi, ctx.prec);
    m.iv = {lo_l.lo, hi_l.hi, false};
    m.h += 1;
  }
}

Mag mag_point(const mpq_class& v, Ctx& ctx) {
  Mag m{0, {v, v, false}};
  normalize(m, ctx);
  return m;
}

// Magnitude of log2(x); requires x >= 1 unless x exceeds height 0.
Mag log_of(const Mag& x, Ctx& ctx) {
  if (x.h >= 1) return Mag{x.h - 1, x.iv};
  if (x.iv.lo_ninf || x.iv.lo < 1) throw Undecidable{};
  QI lo_l = lg2_rat(x.iv.lo, ctx.prec);
  QI hi_l = x.iv.hi == x.iv.lo ? lo_l : lg2_rat(x.iv.hi, ctx.prec);
  return Mag{0, {lo_l.lo, hi_l.hi, false}};
}

// Magnitude of 2^z for a magnitude z of a nonnegative real.
Mag exp2_of(const Mag& z, Ctx& ctx) {
  Mag m{z.h + 1, z.iv};
  if (m.iv.lo_ninf || m.iv.lo < 0) m.iv = {mpq_class(0), m.iv.hi, false};
  if (m.h > ctx.max_height) throw Undecidable{};
  normalize(m, ctx);
  return m;
}

// Raise m by one level (for height alignment during comparisons/sums).
Mag raise_one(const Mag& m, Ctx& ctx) {
  if (m.iv.lo_ninf) throw Undecidable{};
  if (m.h + 1 > ctx.max_height + 1) throw Undecidable{};
  if (m.h == 0) {
    if (m.iv.lo <= 0) {
      if (m.iv.hi <= 0) throw Undecidable{};
      QI hi_l = lg2_rat(m.iv.hi, ctx.prec);
      return Mag{1, {mpq_class(0), hi_l.hi, true}};
    }
    QI lo_l = lg2_rat(m.iv.lo, ctx.prec);
    QI hi_l = lg2_rat(m.iv.hi, ctx.prec);
    return Mag{1, {lo_l.lo, hi_l.hi, false}};
  }
  if (m.iv.lo < 1) throw Undecidable{};
  QI lo_l = lg2_rat(m.iv.lo, ctx.prec);
  QI hi_l = lg2_rat(m.iv.hi, ctx.prec);
  return Mag{m.h + 1, {lo_l.lo, hi_l.hi, false}};
}

// Sum of nonnegative reals.
Mag add_mags(std::vector<Mag> xs, Ctx& ctx) {
  if (xs.empty()) return mag_point(0, ctx);
  bool all_exact0 = true;
  for (const auto& x : xs) all_exact0 = all_exact0 && x.h == 0;
  if (all_exact0) {
    mpq_class lo = 0, hi = 0;
    bool ninf = false;
    for (const auto& x : xs) {
      if (x.iv.lo_ninf) ninf = true;
      lo += x.iv.lo;
      hi += x.iv.hi;
    }
    Mag m{0, {ninf ? mpq_class(0) : lo, hi, ninf}};
    normalize(m, ctx);
    return m;
  }
  int hstar = 0;
  for (const auto& x : xs) hstar = std::max(hstar, x.h);
  // raise everything to hstar; terms too small to raise contribute at most
  // 1 at level hstar (their iterated log is < 1 there)
  std::vector<Mag> lifted;
  for (auto x : xs) {
    bool tiny = false;
    while (x.h < hstar) {
      if (!x.iv.lo_ninf && x.iv.hi < 2 && x.iv.hi >= 0) {
        tiny = true;
        break;
      }
      x = raise_one(x, ctx);
    }
    if (tiny) {
      lifted.push_back(Mag{hstar, {mpq_class(0), mpq_class(1), true}});
    } else {
      lifted.push_back(x);
    }
  }
  // dominant term by upper bound
  std::size_t dom = 0;
  for (std::size_t i = 1; i < lifted.size(); ++i) {
    if (lifted[i].iv.hi > lifted[dom].iv.hi) dom = i;
  }
  mpq_class lo = 0;
  bool lo_ninf = true;
  for (const auto& x : lifted) {
    if (!x.iv.lo_ninf && (lo_ninf || x.iv.lo > lo)) {
      lo = x.iv.lo;
      lo_ninf = false;
    }
  }
  mpq_class hi = lifted[dom].iv.hi;
  if (hstar == 1) {
    QI n_l = lg2_int(mpz_class(static_cast<unsigned long>(lifted.size())), ctx.prec);
    hi += n_l.hi;
  } else {
    // sum <= n * max <= max^2 needs max >= n; lo >= 3 gives max >= 2^2^3 = 256
    if (lifted[dom].iv.lo_ninf || lifted[dom].iv.lo < 3) throw Undecidable{};
    hi += 1;
  }
  Mag m{hstar, {lo, hi, lo_ninf}};
  normalize(m, ctx);
  return m;
}

// Product of nonnegative reals.
Mag mul_mags(std::vector<Mag> xs, Ctx& ctx) {
  if (xs.empty()) return mag_point(1, ctx);
  for (const auto& x : xs) {
    if (!x.iv.lo_ninf && x.iv.hi == 0) return mag_point(0, ctx);
  }
  bool all_exact0 = true;
  for (const auto& x : xs) all_exact0 = all_exact0 && x.h == 0;
  if (all_exact0) {
    mpq_class lo = 1, hi = 1;
    bool ninf = false;
    for (const auto& x : xs) {
      if (x.iv.lo_ninf || x.iv.lo < 0) ninf = true;
      lo *= x.iv.lo_ninf ? mpq_class(0) : x.iv.lo;
      hi *= x.iv.hi;
    }
    Mag m{0, {ninf ? mpq_class(0) : lo, hi, ninf}};
    normalize(m, ctx);
    return m;
  }
  // via logs; every factor must be >= 1 for a sound lower bound, and the
  // sum-of-logs machinery needs nonnegative logs anyway
  std::vector<Mag> logs;
  logs.reserve(xs.size());
  for (const auto& x : xs) {
    if (x.h == 0 && (x.iv.lo_ninf || x.iv.lo < 1)) throw Undecidable{};
    logs.push_back(log_of(x, ctx));
  }
  return exp2_of(add_mags(std::move(logs), ctx), ctx);
}

Mag min_mags(std::vector<Mag> xs, Ctx& ctx) {
  int hstar = 0;
  for (const auto& x : xs) hstar = std::max(hstar, x.h);
  bool first = true;
  QI iv;
  for (auto x : xs) {
    bool tiny = false;
    while (x.h < hstar) {
      if (!x.iv.lo_ninf && x.iv.hi < 2 && x.iv.hi >= 0) {
        tiny = true;
        break;
      }
      x = raise_one(x, ctx);
    }
    QI cur = tiny ? QI{mpq_class(0), mpq_class(1), x.iv.lo_ninf} : x.iv;
    if (tiny && !x.iv.lo_ninf && x.iv.lo >= 0) cur.lo_ninf = true;  // lower at hstar unknown
    if (first) {
      iv = cur;
      first = false;
    } else {
      iv.lo_ninf = iv.lo_ninf || cur.lo_ninf;
      iv.lo = iv.lo_ninf ? mpq_class(0) : std::min(iv.lo, cur.lo);
      iv.hi = std::min(iv.hi, cur.hi);
    }
  }
  return Mag{hstar, iv};
}

Mag max_mags(std::vector<Mag> xs, Ctx& ctx) {
  int hstar = 0;
  for (const auto& x : xs) hstar = std::max(hstar, x.h);
  bool first = true;
  QI iv;
  for (auto x : xs) {
    bool tiny = false;
    while (x.h < hstar) {
      if (!x.iv.lo_ninf && x.iv.hi < 2 && x.iv.hi >= 0) {
        tiny = true;
        break;
      }
      x = raise_one(x, ctx);
    }
    QI cur = tiny ? QI{mpq_class(0), mpq_class(1), true} : x.iv;
    if (first) {
      iv = cur;
      first = false;
    } else {
      if (cur.lo_ninf || iv.lo_ninf) {
        iv.lo_ninf = iv.lo_ninf && cur.lo_ninf;
        if (!cur.lo_ninf) iv.lo = cur.lo;
      } else {
        iv.lo = std::max(iv.lo, cur.lo);
      }
      iv.hi = std::max(iv.hi, cur.hi);
    }
  }
  return Mag{hstar, iv};
}

bool mag_is_exact_small(const Mag& m, mpz_class& out) {
  if (!m.exact()) return false;
  if (m.iv.lo.get_den() != 1) return false;
  out = m.iv.lo.get_num();
  return true;
}

Mag mag_of(const Tower& t, Ctx& ctx);

Mag mag_children_op(const Tower& t, Ctx& ctx) {
  switch (t->op) {
    case TowerOp::Literal:
      return mag_point(mpq_class(t->literal), ctx);
    case TowerOp::Var:
      throw MissingParamError("unbound variable '" + t->name + "' in tower expression");
    case TowerOp::Sum: {
      std::vector<Mag> xs;
      for (const auto& c : t->children) xs.push_back(mag_of(c, ctx));
      return add_mags(std::move(xs), ctx);
    }
    case TowerOp::Product: {
      std::vector<Mag> xs;
      for (const auto& c : t->children) xs.push_back(mag_of(c, ctx));
      return mul_mags(std::move(xs), ctx);
    }
    case TowerOp::Power: {
      Mag b = mag_of(t->children[0], ctx);
      Mag e = mag_of(t->children[1], ctx);
      mpz_class bv, ev;
      bool b_small = mag_is_exact_small(b, bv);
      bool e_small = mag_is_exact_small(e, ev);
      if (e_small && ev == 0) return mag_point(1, ctx);
      if (e_small && ev == 1) return b;
      if (b_small && bv == 0) return mag_point(0, ctx);
      if (b_small && bv == 1) return mag_point(1, ctx);
      if (!b.iv.lo_ninf && b.iv.lo < 2 && b.h == 0) throw Undecidable{};
      if (!e.iv.lo_ninf && e.iv.lo < 1 && e.h == 0) throw Undecidable{};
      Mag z = mul_mags({e, log_of(b, ctx)}, ctx);
      return exp2_of(z, ctx);
    }
    case TowerOp::Factorial: {
      Mag x = mag_of(t->children[0], ctx);
      mpz_class xv;
      if (mag_is_exact_small(x, xv) && xv <= 65536) {
        mpz_class r;
        mpz_fac_ui(r.get_mpz_t(), xv.get_ui());
        return mag_point(mpq_class(r), ctx);
      }
      // (x/3)^x <= x! <= x^x for x >= 1; the exact branch above covers all
      // small x, so here x is large and log2(x) - log2(3) stays positive
      if (!x.iv.lo_ninf && x.h == 0 && x.iv.lo < 4) throw Undecidable{};
      if (x.iv.lo_ninf) throw Undecidable{};
      Mag lx = log_of(x, ctx);
      Mag upper = exp2_of(mul_mags({x, lx}, ctx), ctx);
      Mag lx_low = lx;
      if (lx_low.h == 0) {
        lx_low.iv.lo -= mpq_class(1585, 1000);  // log2(3) < 1.585
        if (lx_low.iv.lo < 0) lx_low.iv.lo = 0;
      } else {
        lx_low.iv.lo -= 1;  // log2(x)-log2(3) >= log2(x)/2 up here
        if (lx_low.iv.lo < 0) lx_low.iv.lo = 0;
      }
      Mag lower = exp2_of(mul_mags({x, lx_low}, ctx), ctx);
      // sound bracket: [lower.lo, upper.hi] at common height
      Mag l2 = lower, u2 = upper;
      while (l2.h < u2.h) l2 = raise_one(l2, ctx);
      while (u2.h < l2.h) u2 = raise_one(u2, ctx);
      return Mag{l2.h, {l2.iv.lo, u2.iv.hi, l2.iv.lo_ninf}};
    }
    case TowerOp::Binomial: {
      Mag n = mag_of(t->children[0], ctx);
      Mag k = mag_of(t->children[1], ctx);
      mpz_class nv, kv;
      if (mag_is_exact_small(n, nv) && mag_is_exact_small(k, kv)) {
        if (kv > nv) return mag_point(0, ctx);
        if (kv.fits_ulong_p() && mpz_sizeinbase(nv.get_mpz_t(), 2) * std::max<unsigned long>(kv.get_ui(), 1) < (1u << 22)) {
          mpz_class r;
          mpz_bin_ui(r.get_mpz_t(), nv.get_mpz_t(), kv.get_ui());
          return mag_point(mpq_class(r), ctx);
        }
      }
      // C(n,k) <= min(n^k, 2^n); lower bound tracked as unknown
      Mag up1 = mag_children_op(tpow(t->children[0], t->children[1]), ctx);
      Mag up2 = exp2_of(n, ctx);
      Mag m = min_mags({up1, up2}, ctx);
      m.iv.lo_ninf = true;
      m.iv.lo = 0;
      return m;
    }
    case TowerOp::Min: {
      std::vector<Mag> xs;
      for (const auto& c : t->children) xs.push_back(mag_of(c, ctx));
      return min_mags(std::move(xs), ctx);
    }
    case TowerOp::Max: {
      std::vector<Mag> xs;
      for (const auto& c : t->children) xs.push_back(mag_of(c, ctx));
      return max_mags(std::move(xs), ctx);
    }
  }
  throw Error("unreachable tower op");
}

Mag mag_of(const Tower& t, Ctx& ctx) {
  auto it = ctx.memo.find(t.get());
  if (it != ctx.memo.end()) return it->second;
  // exact evaluation for comfortably small subtrees keeps brackets tight
  std::uint64_t est = 0;
  bool have_est = true;
  try {
    est = bits_estimate(t);
  } catch (const MissingParamError&) {
    throw;
  } catch (...) {
    have_est = false;
  }
  Mag m;
  if (have_est && est <= 4096) {
    m = mag_point(mpq_class(eval_exact(t, 4096)), ctx);
  } else {
    m = mag_children_op(t, ctx);
  }
  ctx.memo.emplace(t.get(), m);
  return m;
}

Ordering cmp_mags(Mag a, Mag b, Ctx& ctx) {
  // exact equality only visible at height 0
  if (a.exact() && b.exact()) {
    if (a.iv.lo < b.iv.lo) return Ordering::LT;
    if (a.iv.lo > b.iv.lo) return Ordering::GT;
    return Ordering::EQ;
  }
  for (int guard = 0; guard < ctx.max_height + 2; ++guard) {
    if (a.h == b.h) {
      if (a.iv.hi < b.iv.lo && !b.iv.lo_ninf) return Ordering::LT;
      if (b.iv.hi < a.iv.lo && !a.iv.lo_ninf) return Ordering::GT;
      return Ordering::UNDECIDED;
    }
    Mag& low = a.h < b.h ? a : b;
    const Mag& high = a.h < b.h ? b : a;
    // strictly shorter tower with a small top loses outright
    if (!low.iv.lo_ninf && low.iv.hi < 2 && !high.iv.lo_ninf && high.iv.lo >= 1) {
      return a.h < b.h ? Ordering::LT : Ordering::GT;
    }
    try {
      low = raise_one(low, ctx);
    } catch (const Undecidable&) {
      return Ordering::UNDECIDED;
    }
  }
  return Ordering::UNDECIDED;
}

}  // namespace

Ordering compare(const Tower& a, const Tower& b, const CompareOptions& opts) {
  // exact route first
  bool ea = false, eb = false;
  mpz_class va, vb;
  try {
    va = eval_exact(a, opts.exact_bit_cap);
    ea = true;
  } catch (const TooLargeError&) {
  }
  try {
    vb = eval_exact(b, opts.exact_bit_cap);
    eb = true;
  } catch (const TooLargeError&) {
  }
  if (ea && eb) {
    int c = cmp(va, vb);
    return c < 0 ? Ordering::LT : (c > 0 ? Ordering::GT : Ordering::EQ);
  }
  for (int prec : {opts.precision_bits, opts.precision_bits * 2}) {
    Ctx ctx{prec, opts.max_height, opts.exact_bit_cap, {}};
    try {
      Mag ma = ea ? mag_point(mpq_class(va), ctx) : mag_of(a, ctx);
      Mag mb = eb ? mag_point(mpq_class(vb), ctx) : mag_of(b, ctx);
      Ordering o = cmp_mags(ma, mb, ctx);
      if (o != Ordering::UNDECIDED) return o;
    } catch (const Undecidable&) {
      // fall through to retry or report UNDECIDED
    }
  }
  return Ordering::UNDECIDED;
}

LogFloorResult log_floor(const Tower& a, const mpz_class& base, const CompareOptions& opts) {
  if (base < 2) throw BadInputError("log base must be >= 2");
  // exact
  try {
    mpz_class v = eval_exact(a, opts.exact_bit_cap);
    if (v < 1) throw BadInputError("log_floor argument must be >= 1");
    mpz_class k = 0, power = 1;
    while (power * base <= v) {
      power *= base;
      k += 1;
    }
    return {tlit(k), tlit(k), true};
  } catch (const TooLargeError&) {
  }
  // structural: base^e, e integral by construction
  if (a->op == TowerOp::Power && a->children[0]->op == TowerOp::Literal &&
      a->children[0]->literal == base) {
    return {a->children[1], a->children[1], true};
  }
  // interval via one log level
  Ctx ctx{opts.precision_bits, opts.max_height, opts.exact_bit_cap, {}};
  try {
    Mag m = mag_of(a, ctx);
    if (m.h > 1) {
      // too tall to materialize as literals; trivial but sound bracket
      return {tlit(0), a, false};
    }
    if (m.h == 1 && !m.iv.lo_ninf) {
      QI lb = lg2_int(base, ctx.prec);
      mpq_class lo_q = m.iv.lo / lb.hi;
      mpq_class hi_q = m.iv.hi / lb.lo;
      mpz_class lo_z = lo_q.get_num() / lo_q.get_den();
      mpz_class hi_z = hi_q.get_num() / hi_q.get_den() + 1;
      return {tlit(lo_z), tlit(hi_z), false};
    }
  } catch (const Undecidable&) {
  }
  return {tlit(0), a, false};
}

}  // namespace jordanlab
