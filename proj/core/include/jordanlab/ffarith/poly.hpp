#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jordanlab/ffarith/field.hpp"

namespace jordanlab {

// Sparse multivariate polynomial over a fixed field. Monomials are exponent
// vectors of fixed length nvars; zero coefficients are never stored. The zero
// polynomial has an empty term map and degree NEG_INF (a dedicated sentinel,
// not -1).
class Poly {
 public:
  using Monomial = std::vector<std::uint32_t>;
  static constexpr int kNegInfDeg = INT32_MIN;

  Poly() : nvars_(0) {}
  Poly(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}

  static Poly constant(Field f, std::size_t nvars, felt c);
  static Poly variable(Field f, std::size_t nvars, std::size_t idx);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }

  // max total degree; kNegInfDeg for the zero polynomial
  int degree() const;

  void add_term(const Monomial& m, felt c);
  const std::map<Monomial, felt>& terms() const { return terms_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  felt eval(const std::vector<felt>& point) const;

  // Substitute polynomials for the variables (composition). subs.size() must
  // equal nvars(); all subs share one variable count and field.
  Poly compose(const std::vector<Poly>& subs) const;

  // Map coefficients through a field embedding (same monomials).
  Poly map_coeffs(const FieldEmbedding& emb) const;

  std::string to_string() const;  // deterministic, for reports

  // --- univariate helpers (nvars() == 1) ---
  // Coefficient of t^i.
  felt coeff_univ(std::uint32_t i) const;
  // r-th Hasse derivative: sum_i C(i, r) a_i t^(i-r).
  Poly hasse_derivative(std::uint32_t r) const;
  felt eval_univ(felt x) const;

  // Parse the documented expression grammar over variables. Names: for a
  // perfect-square variable count s*s with s <= 9, "xRC" with single digits
  // R, C in [1, s]; otherwise (and additionally) "xK" with K in [1, nvars].
  // Tokens: integers, variables, + - * ^ and parentheses.
  static Poly parse(Field f, std::size_t nvars, const std::string& text);

 private:
  Field field_;
  std::size_t nvars_;
  std::map<Monomial, felt> terms_;
};

// C(n, k) mod p for machine-word n, k (used by Hasse derivatives).
felt binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

}  // namespace jordanlab
