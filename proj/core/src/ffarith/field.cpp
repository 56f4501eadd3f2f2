#include "jordanlab/ffarith/field.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace jordanlab {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;  // dense poly over GF(p), c[i] = coeff of t^i

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint64_t p) {
  // m monic
  while (a.size() >= m.size()) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - m.size();
    if (lead != 0) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t sub = (lead * m[i]) % p;
        std::uint64_t cur = a[shift + i];
        a[shift + i] = static_cast<std::uint32_t>((cur + p - sub % p) % p);
      }
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(out), m, p);
}

Coeffs poly_powmod(Coeffs base, std::uint64_t k, const Coeffs& m, std::uint64_t p) {
  Coeffs result{1};
  base = poly_mod(std::move(base), m, p);
  while (k > 0) {
    if (k & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return result;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
  auto inv_mod_p = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // normalize b monic, then a mod b
    std::uint64_t li = inv_mod_p(b.back());
    for (auto& c : b) c = static_cast<std::uint32_t>(c * li % p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// f monic of degree e >= 1; irreducible iff t^(p^e) == t mod f and
// gcd(t^(p^(e/l)) - t, f) = 1 for every prime l dividing e.
bool is_irreducible(const Coeffs& f, std::uint64_t p) {
  std::size_t e = f.size() - 1;
  if (e == 1) return true;
  Coeffs t{0, 1};
  // t^(p^e) by e repeated p-th powers
  Coeffs x = t;
  for (std::size_t i = 0; i < e; ++i) x = poly_powmod(std::move(x), p, f, p);
  Coeffs diff = x;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
  trim(diff);
  if (!diff.empty()) return false;
  // proper-divisor checks
  std::size_t rem = e;
  std::vector<std::size_t> prime_divs;
  for (std::size_t d = 2; d * d <= rem; ++d) {
    if (rem % d == 0) {
      prime_divs.push_back(d);
      while (rem % d == 0) rem /= d;
    }
  }
  if (rem > 1) prime_divs.push_back(rem);
  for (std::size_t l : prime_divs) {
    std::size_t k = e / l;
    Coeffs y = t;
    for (std::size_t i = 0; i < k; ++i) y = poly_powmod(std::move(y), p, f, p);
    Coeffs d2 = y;
    d2.resize(std::max<std::size_t>(d2.size(), 2), 0);
    d2[1] = static_cast<std::uint32_t>((d2[1] + p - 1) % p);
    trim(d2);
    Coeffs g = poly_gcd(f, d2, p);
    if (g.size() > 1) return false;
  }
  return true;
}

// Least monic irreducible of degree e, coefficient tuples (c_{e-1},...,c_0)
// in lexicographic order. For e = 1 this is the polynomial t.
Coeffs least_irreducible(std::uint64_t p, std::uint32_t e) {
  if (e == 1) return Coeffs{0, 1};
  std::vector<std::uint32_t> low(e, 0);
  for (;;) {
    Coeffs f(low.begin(), low.end());
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    // increment (c_{e-1},...,c_0) as a base-p counter, most significant first
    std::size_t i = 0;  // i = 0 is c_0, least significant in lex order
    while (i < e) {
      if (++low[i] < p) break;
      low[i] = 0;
      ++i;
    }
    if (i == e) throw Error("no irreducible polynomial found (unreachable)");
  }
}

Coeffs decode(felt v, std::uint64_t p, std::uint32_t e) {
  Coeffs c(e, 0);
  for (std::uint32_t i = 0; i < e && v; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p);
    v = static_cast<felt>(v / p);
  }
  trim(c);
  return c;
}

felt encode(const Coeffs& c, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return static_cast<felt>(v);
}

}  // namespace

Field Field::make(std::uint64_t p, std::uint32_t e, std::uint64_t cap) {
  if (!is_prime_u64(p)) throw NotPrimeError("field characteristic must be prime, got " + std::to_string(p));
  if (e < 1) throw BadInputError("extension degree must be >= 1");
  // overflow-safe p^e
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (q > cap / p) throw CapExceededError("field size p^e exceeds cap");
    q *= p;
  }
  if (q > cap) throw CapExceededError("field size p^e exceeds cap");

  // one immutable impl per (p, e); the modulus search is deterministic
  static std::map<std::pair<std::uint64_t, std::uint32_t>, std::shared_ptr<const Impl>> cache;
  auto key = std::make_pair(p, e);
  auto it = cache.find(key);
  if (it != cache.end()) {
    Field f;
    f.impl_ = it->second;
    return f;
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = q;
  impl->modulus = least_irreducible(p, e);

  if (q <= kTableLimit) {
    auto& m = const_cast<Impl&>(*impl);
    m.mul_table.resize(q * q);
    m.add_table.resize(q * q);
    m.inv_table.assign(q, 0);
    Field tmp;
    tmp.impl_ = impl;
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        m.add_table[a * q + b] = tmp.add_slow(static_cast<felt>(a), static_cast<felt>(b));
        m.mul_table[a * q + b] = tmp.mul_slow(static_cast<felt>(a), static_cast<felt>(b));
      }
    }
    for (std::uint64_t a = 1; a < q; ++a) {
      for (std::uint64_t b = 1; b < q; ++b) {
        if (m.mul_table[a * q + b] == 1) {
          m.inv_table[a] = static_cast<felt>(b);
          break;
        }
      }
    }
  }
  cache.emplace(key, impl);
  Field f;
  f.impl_ = impl;
  return f;
}

felt Field::add_slow(felt a, felt b) const {
  const auto p = impl_->p;
  if (impl_->e == 1) return static_cast<felt>((std::uint64_t(a) + b) % p);
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < impl_->e; ++i) {
    std::uint64_t da = a % p, db = b % p;
    a = static_cast<felt>(a / p);
    b = static_cast<felt>(b / p);
    out += ((da + db) % p) * mult;
    mult *= p;
  }
  return static_cast<felt>(out);
}

felt Field::add(felt a, felt b) const {
  if (!impl_->add_table.empty()) return impl_->add_table[std::uint64_t(a) * impl_->q + b];
  return add_slow(a, b);
}

felt Field::neg(felt a) const {
  const auto p = impl_->p;
  if (impl_->e == 1) return static_cast<felt>((p - a) % p);
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < impl_->e; ++i) {
    std::uint64_t da = a % p;
    a = static_cast<felt>(a / p);
    out += ((p - da) % p) * mult;
    mult *= p;
  }
  return static_cast<felt>(out);
}

felt Field::sub(felt a, felt b) const { return add(a, neg(b)); }

felt Field::mul_slow(felt a, felt b) const {
  const auto p = impl_->p;
  if (impl_->e == 1) return static_cast<felt>(std::uint64_t(a) * b % p);
  Coeffs ca = decode(a, p, impl_->e), cb = decode(b, p, impl_->e);
  return encode(poly_mulmod(ca, cb, impl_->modulus, p), p);
}

felt Field::mul(felt a, felt b) const {
  if (!impl_->mul_table.empty()) return impl_->mul_table[std::uint64_t(a) * impl_->q + b];
  return mul_slow(a, b);
}

felt Field::pow(felt a, std::uint64_t k) const {
  felt r = 1, base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

felt Field::inv(felt a) const {
  if (a == 0) throw NotInvertibleError("division by zero in GF(p^e)");
  if (!impl_->inv_table.empty()) return impl_->inv_table[a];
  return pow(a, impl_->q - 2);
}

felt Field::from_int(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(impl_->p);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return static_cast<felt>(r);
}

felt Field::frobenius(felt a, std::uint64_t q) const {
  std::uint64_t t = q;
  while (t > 1) {
    if (t % impl_->p != 0) throw BadQError("frobenius exponent must be a power of the characteristic");
    t /= impl_->p;
  }
  if (t != 1) throw BadQError("frobenius exponent must be a power of the characteristic");
  return pow(a, q);
}

std::uint64_t Field::mult_order(felt a) const {
  if (a == 0) throw NotInvertibleError("0 has no multiplicative order");
  std::uint64_t n = 1;
  felt x = a;
  while (x != 1) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

FieldEmbedding::FieldEmbedding(const Field& src, const Field& dst) : src_(src), dst_(dst) {
  if (src.characteristic() != dst.characteristic() || dst.ext_degree() % src.ext_degree() != 0) {
    throw BadInputError("target field is not an extension of the source field");
  }
  const auto e = src.ext_degree();
  // least root of the source modulus in dst fixes the embedding
  const auto& m = src.modulus();
  felt root = 0;
  bool found = false;
  for (std::uint64_t x = 0; x < dst.size(); ++x) {
    felt acc = 0, xp = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      acc = dst.add(acc, dst.mul(dst.from_int(static_cast<std::int64_t>(m[i])), xp));
      xp = dst.mul(xp, static_cast<felt>(x));
    }
    if (acc == 0) {
      root = static_cast<felt>(x);
      found = true;
      break;
    }
  }
  if (!found) throw BadInputError("source modulus has no root in target field");
  powers_.resize(e);
  powers_[0] = 1;
  for (std::uint32_t i = 1; i < e; ++i) powers_[i] = dst.mul(powers_[i - 1], root);
}

felt FieldEmbedding::operator()(felt a) const {
  const auto p = src_.characteristic();
  felt out = 0;
  for (std::uint32_t i = 0; i < src_.ext_degree(); ++i) {
    std::uint32_t digit = static_cast<std::uint32_t>(a % p);
    a = static_cast<felt>(a / p);
    if (digit) out = dst_.add(out, dst_.mul(dst_.from_int(digit), powers_[i]));
  }
  return out;
}

}  // namespace jordanlab
