#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jordanlab/ffarith/field.hpp"
#include "jordanlab/ffarith/poly.hpp"

namespace jordanlab {

// Dense square matrix over GF(p^e). Value type; entries stored row-major.
class MatrixOverF {
 public:
  MatrixOverF() : n_(0) {}
  MatrixOverF(Field f, std::size_t n) : field_(f), n_(n), a_(n * n, 0) {}

  static MatrixOverF identity(Field f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t side() const { return n_; }

  felt at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  felt& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  MatrixOverF operator*(const MatrixOverF& o) const;
  MatrixOverF operator+(const MatrixOverF& o) const;
  MatrixOverF operator-(const MatrixOverF& o) const;
  bool operator==(const MatrixOverF& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const MatrixOverF& o) const { return !(*this == o); }

  felt det() const;
  std::size_t rank() const;
  bool is_identity() const;

  // Inverse via Gauss-Jordan; throws NotInvertibleError if singular.
  MatrixOverF inverse() const;

  MatrixOverF pow(std::uint64_t k) const;

  // Entrywise q-th power (q a power of the characteristic; BadQError otherwise).
  MatrixOverF frobenius(std::uint64_t q) const;

  // Monic characteristic polynomial (univariate, degree n), division-free
  // Berkowitz computation so it is valid in any characteristic.
  Poly charpoly() const;

  // Evaluate a univariate polynomial at this matrix.
  MatrixOverF eval_poly(const Poly& p) const;

  // Canonical byte encoding: entries row-major, each the encoded element value
  // as 4 little-endian bytes (the value is the base-p little-endian digit
  // packing of the coefficient vector). Stable; used as hash keys.
  std::string canonical_bytes() const;

  MatrixOverF map_entries(const FieldEmbedding& emb) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<felt> a_;
};

}  // namespace jordanlab
