#include "jordanlab/ffarith/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace jordanlab {

felt binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  // Lucas: C(n,k) mod p = prod C(n_i, k_i) over base-p digits
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // C(ni, ki) mod p with ni, ki < p
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den != 0 since ki < p
    std::uint64_t dinv = 1, e = p - 2, base = den;
    while (e) {
      if (e & 1) dinv = dinv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * dinv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<felt>(result);
}

Poly Poly::constant(Field f, std::size_t nvars, felt c) {
  Poly out(f, nvars);
  if (c != 0) out.terms_[Monomial(nvars, 0)] = c;
  return out;
}

Poly Poly::variable(Field f, std::size_t nvars, std::size_t idx) {
  Poly out(f, nvars);
  Monomial m(nvars, 0);
  m[idx] = 1;
  out.terms_[m] = 1;
  return out;
}

int Poly::degree() const {
  if (terms_.empty()) return kNegInfDeg;
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int total = std::accumulate(m.begin(), m.end(), 0);
    d = std::max(d, total);
  }
  return d;
}

void Poly::add_term(const Monomial& m, felt c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    felt s = field_.add(it->second, c);
    if (s == 0) {
      terms_.erase(it);
    } else {
      it->second = s;
    }
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-() const {
  Poly out(field_, nvars_);
  for (const auto& [m, c] : terms_) out.terms_[m] = field_.neg(c);
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly out(field_, nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, field_.mul(ca, cb));
    }
  }
  return out;
}

felt Poly::eval(const std::vector<felt>& point) const {
  felt acc = 0;
  for (const auto& [m, c] : terms_) {
    felt t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) t = field_.mul(t, field_.pow(point[i], m[i]));
    }
    acc = field_.add(acc, t);
  }
  return acc;
}

Poly Poly::compose(const std::vector<Poly>& subs) const {
  if (subs.size() != nvars_) throw BadInputError("compose: wrong substitution count");
  std::size_t out_vars = subs.empty() ? 0 : subs[0].nvars();
  Poly out(field_, out_vars);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(field_, out_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) term = term * subs[i];
    }
    out = out + term;
  }
  return out;
}

Poly Poly::map_coeffs(const FieldEmbedding& emb) const {
  Poly out(emb.dst(), nvars_);
  for (const auto& [m, c] : terms_) out.add_term(m, emb(c));
  return out;
}

felt Poly::coeff_univ(std::uint32_t i) const {
  Monomial m{i};
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

Poly Poly::hasse_derivative(std::uint32_t r) const {
  if (nvars_ != 1) throw BadInputError("hasse_derivative: univariate only");
  Poly out(field_, 1);
  const auto p = field_.characteristic();
  for (const auto& [m, c] : terms_) {
    std::uint32_t i = m[0];
    if (i < r) continue;
    felt b = binomial_mod_p(i, r, p);
    if (b == 0) continue;
    out.add_term(Monomial{i - r}, field_.mul(field_.from_int(b), c));
  }
  return out;
}

felt Poly::eval_univ(felt x) const { return eval({x}); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      os << "*x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

namespace {

struct Parser {
  Field f;
  std::size_t nvars;
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Poly parse_expr() {
    Poly lhs = parse_term();
    for (;;) {
      skip();
      if (eat('+')) {
        lhs = lhs + parse_term();
      } else if (eat('-')) {
        lhs = lhs - parse_term();
      } else {
        return lhs;
      }
    }
  }

  Poly parse_term() {
    Poly lhs = parse_power();
    for (;;) {
      skip();
      if (eat('*')) {
        lhs = lhs * parse_power();
      } else {
        return lhs;
      }
    }
  }

  Poly parse_power() {
    Poly base = parse_atom();
    skip();
    if (eat('^')) {
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw BadInputError("poly parse: exponent expected at " + std::to_string(pos));
      unsigned long k = std::stoul(s.substr(start, pos - start));
      Poly out = Poly::constant(f, nvars, 1);
      for (unsigned long i = 0; i < k; ++i) out = out * base;
      return out;
    }
    return base;
  }

  Poly parse_atom() {
    skip();
    if (pos >= s.size()) throw BadInputError("poly parse: unexpected end of input");
    if (eat('(')) {
      Poly inner = parse_expr();
      if (!eat(')')) throw BadInputError("poly parse: missing ')'");
      return inner;
    }
    if (s[pos] == '-') {
      ++pos;
      return -parse_atom();
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      long long v = std::stoll(s.substr(start, pos - start));
      return Poly::constant(f, nvars, f.from_int(v));
    }
    if (s[pos] == 'x') {
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string digits = s.substr(start, pos - start);
      if (digits.empty()) throw BadInputError("poly parse: variable index expected");
      std::size_t side = 0;
      while ((side + 1) * (side + 1) <= nvars) ++side;
      bool square = side * side == nvars;
      if (square && side <= 9 && digits.size() == 2) {
        std::size_t r = digits[0] - '0', c = digits[1] - '0';
        if (r < 1 || r > side || c < 1 || c > side) throw BadInputError("poly parse: variable x" + digits + " out of range");
        return Poly::variable(f, nvars, (r - 1) * side + (c - 1));
      }
      std::size_t k = std::stoul(digits);
      if (k < 1 || k > nvars) throw BadInputError("poly parse: variable x" + digits + " out of range");
      return Poly::variable(f, nvars, k - 1);
    }
    throw BadInputError(std::string("poly parse: unexpected character '") + s[pos] + "'");
  }
};

}  // namespace

Poly Poly::parse(Field f, std::size_t nvars, const std::string& text) {
  Parser p{f, nvars, text};
  Poly out = p.parse_expr();
  p.skip();
  if (p.pos != text.size()) throw BadInputError("poly parse: trailing input at " + std::to_string(p.pos));
  return out;
}

}  // namespace jordanlab
