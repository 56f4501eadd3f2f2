#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jordanlab/errors.hpp"

namespace jordanlab {

enum class TowerOp { Literal, Var, Sum, Product, Power, Factorial, Binomial, Min, Max };

class TowerExpr;
using Tower = std::shared_ptr<const TowerExpr>;

// Immutable symbolic nonnegative-integer expression. Shared subtrees form a
// DAG; nodes carry a structural hash so equal trees can be pooled.
class TowerExpr {
 public:
  TowerOp op;
  mpz_class literal;             // op == Literal
  std::string name;              // op == Var
  std::vector<Tower> children;   // other ops
  std::size_t hash;

  static Tower make_literal(const mpz_class& v);
  static Tower make_var(const std::string& name);
  static Tower make(TowerOp op, std::vector<Tower> children);

 private:
  TowerExpr() = default;
};

// Construction helpers.
Tower tlit(const mpz_class& v);
Tower tlit(std::uint64_t v);
Tower tvar(const std::string& name);
Tower tsum(std::vector<Tower> xs);
Tower tmul(std::vector<Tower> xs);
Tower tpow(Tower base, Tower exp);
Tower tfact(Tower x);
Tower tbinom(Tower n, Tower k);
Tower tmin(std::vector<Tower> xs);
Tower tmax(std::vector<Tower> xs);

bool tower_equal(const Tower& a, const Tower& b);

// Replace named variables. Throws MissingParamError from eval/compare paths
// when an unbound Var is still present there.
Tower substitute(const Tower& t, const std::map<std::string, Tower>& env);

// List unbound variable names (sorted, unique).
std::vector<std::string> free_vars(const Tower& t);

// Exact evaluation. A cheap bit-size overestimate runs first; throws
// TooLargeError if the estimate exceeds bit_cap.
mpz_class eval_exact(const Tower& t, std::uint64_t bit_cap);

// Bit-size overestimate used by eval_exact (saturating; huge values report
// UINT64_MAX). Never underestimates.
std::uint64_t bits_estimate(const Tower& t);

enum class Ordering { LT, EQ, GT, UNDECIDED };

struct CompareOptions {
  std::uint64_t exact_bit_cap = std::uint64_t(1) << 20;  // try exact below this
  int max_height = 5;                                    // nested-log iteration limit
  int precision_bits = 128;                              // log bracket precision
};

// Sound comparison: LT/EQ/GT are never wrong; UNDECIDED only when the
// iterated-log intervals still overlap at the iteration limit.
Ordering compare(const Tower& a, const Tower& b, const CompareOptions& opts = {});

struct LogFloorResult {
  Tower lo;
  Tower hi;
  bool exact;  // lo == hi guaranteed to equal floor(log_base a)
};

// Sound bracketing of floor(log_base a); exact when a fits the cap or the
// bracket is forced by structure (e.g. a = base^e).
LogFloorResult log_floor(const Tower& a, const mpz_class& base,
                         const CompareOptions& opts = {});

// Prefix-notation serialization, e.g. pow(n, pow(n, mul(pow(2,23), pow(n,10)))).
std::string to_text(const Tower& t);
Tower parse_tower(const std::string& text);

}  // namespace jordanlab
