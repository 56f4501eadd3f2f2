#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "jordanlab/errors.hpp"

namespace jordanlab {

// Encoded element of GF(p^e): the integer sum c_i * p^i where (c_0,...,c_{e-1})
// is the coefficient vector of the residue class, c_i being the coefficient of
// t^i. This doubles as the canonical byte-level encoding (little-endian in p).
using felt = std::uint32_t;

// GF(p^e) with a deterministic modulus: the lexicographically least monic
// irreducible polynomial of degree e over GF(p), coefficient tuples compared
// from the highest power down. Same (p, e) always yields the same field.
// Immutable after construction; cheap to copy (shared impl).
class Field {
 public:
  static constexpr std::uint64_t kDefaultCap = std::uint64_t(1) << 20;

  // Throws NotPrimeError if p is not prime, CapExceededError if p^e > cap.
  static Field make(std::uint64_t p, std::uint32_t e, std::uint64_t cap = kDefaultCap);

  std::uint64_t characteristic() const { return impl_->p; }
  std::uint32_t ext_degree() const { return impl_->e; }
  std::uint64_t size() const { return impl_->q; }

  // Coefficients of the modulus, t^0 first, including the leading 1.
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

  felt zero() const { return 0; }
  felt one() const { return 1; }

  felt add(felt a, felt b) const;
  felt sub(felt a, felt b) const;
  felt neg(felt a) const;
  felt mul(felt a, felt b) const;
  felt inv(felt a) const;  // throws NotInvertibleError on 0
  felt pow(felt a, std::uint64_t k) const;

  // Embedding of the prime ring: n mod p as a constant.
  felt from_int(std::int64_t n) const;

  // a^q entrywise Frobenius power; q must be a power of p (BadQError otherwise).
  felt frobenius(felt a, std::uint64_t q) const;

  // Multiplicative order of a nonzero element.
  std::uint64_t mult_order(felt a) const;

  bool same_as(const Field& other) const { return impl_ == other.impl_; }
  bool operator==(const Field& other) const {
    return impl_->p == other.impl_->p && impl_->e == other.impl_->e;
  }

  // All elements in canonical (numeric) order: 0, 1, ..., q-1.
  std::uint64_t element_count() const { return impl_->q; }

 private:
  struct Impl {
    std::uint64_t p = 0;
    std::uint32_t e = 0;
    std::uint64_t q = 0;
    std::vector<std::uint32_t> modulus;  // degree e, monic; size e+1
    // lookup tables, present when q <= kTableLimit
    std::vector<felt> mul_table;
    std::vector<felt> add_table;
    std::vector<felt> inv_table;
  };
  static constexpr std::uint64_t kTableLimit = 1024;

  felt mul_slow(felt a, felt b) const;
  felt add_slow(felt a, felt b) const;

  std::shared_ptr<const Impl> impl_;
};

bool is_prime_u64(std::uint64_t n);

// Embedding GF(p^e) -> GF(p^(e*k)) determined by sending the source generator t
// to the least root (in canonical element order) of the source modulus in the
// target field. Deterministic; throws BadInputError if the target is not an
// extension of the source.
class FieldEmbedding {
 public:
  FieldEmbedding(const Field& src, const Field& dst);
  felt operator()(felt a) const;
  const Field& src() const { return src_; }
  const Field& dst() const { return dst_; }

 private:
  Field src_, dst_;
  std::vector<felt> powers_;  // images of t^0..t^{e-1}
};

}  // namespace jordanlab
