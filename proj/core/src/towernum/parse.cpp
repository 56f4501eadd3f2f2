#include <cctype>
#include <sstream>

#include "jordanlab/towernum/tower.hpp"

namespace jordanlab {

namespace {

const char* op_name(TowerOp op) {
  switch (op) {
    case TowerOp::Sum: return "add";
    case TowerOp::Product: return "mul";
    case TowerOp::Power: return "pow";
    case TowerOp::Factorial: return "fact";
    case TowerOp::Binomial: return "binom";
    case TowerOp::Min: return "min";
    case TowerOp::Max: return "max";
    default: return "?";
  }
}

void write(const Tower& t, std::ostringstream& os) {
  switch (t->op) {
    case TowerOp::Literal:
      os << t->literal.get_str();
      return;
    case TowerOp::Var:
      os << t->name;
      return;
    default: {
      os << op_name(t->op) << "(";
      for (std::size_t i = 0; i < t->children.size(); ++i) {
        if (i) os << ", ";
        write(t->children[i], os);
      }
      os << ")";
      return;
    }
  }
}

struct TowerParser {
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

  Tower parse() {
    skip();
    if (pos >= s.size()) throw BadInputError("tower parse: unexpected end of input");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return tlit(mpz_class(s.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
        ++pos;
      }
      std::string word = s.substr(start, pos - start);
      skip();
      if (pos < s.size() && s[pos] == '(') {
        ++pos;
        std::vector<Tower> args;
        skip();
        if (!eat(')')) {
          args.push_back(parse());
          while (eat(',')) args.push_back(parse());
          if (!eat(')')) throw BadInputError("tower parse: expected ')'");
        }
        auto arity = [&](std::size_t n) {
          if (args.size() != n) {
            throw BadInputError("tower parse: " + word + " expects " + std::to_string(n) + " arguments");
          }
        };
        auto at_least = [&](std::size_t n) {
          if (args.size() < n) {
            throw BadInputError("tower parse: " + word + " expects at least " + std::to_string(n) + " arguments");
          }
        };
        if (word == "add") { at_least(1); return tsum(std::move(args)); }
        if (word == "mul") { at_least(1); return tmul(std::move(args)); }
        if (word == "pow") { arity(2); return tpow(args[0], args[1]); }
        if (word == "fact") { arity(1); return tfact(args[0]); }
        if (word == "binom") { arity(2); return tbinom(args[0], args[1]); }
        if (word == "min") { at_least(1); return tmin(std::move(args)); }
        if (word == "max") { at_least(1); return tmax(std::move(args)); }
        throw BadInputError("tower parse: unknown function '" + word + "'");
      }
      return tvar(word);
    }
    throw BadInputError(std::string("tower parse: unexpected character '") + c + "'");
  }
};

}  // namespace

std::string to_text(const Tower& t) {
  std::ostringstream os;
  write(t, os);
  return os.str();
}

Tower parse_tower(const std::string& text) {
  TowerParser p{text};
  Tower t = p.parse();
  p.skip();
  if (p.pos != text.size()) throw BadInputError("tower parse: trailing input");
  return t;
}

}  // namespace jordanlab
