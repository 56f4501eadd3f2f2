#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "jordanlab/ffarith/matrix.hpp"
#include "jordanlab/ffarith/poly.hpp"

namespace jordanlab {

// Parametrized point enumerators for families whose brute-force scan would be
// wasteful. BRUTE scans the full ambient space.
enum class Enumerator { BRUTE, GLN, TORUS, UNITRIANGULAR };

// Affine variety: a finite polynomial system over a fixed field. Membership
// is decidable by evaluation; point enumeration lives in points.cpp.
struct VarietySpec {
  Field field;
  std::size_t ambient_vars = 0;
  std::vector<Poly> polys;
  Enumerator enumerator = Enumerator::BRUTE;
  std::size_t matrix_n = 0;  // for GLN/TORUS/UNITRIANGULAR: the n of GL_n

  // product of the positive polynomial degrees (a degree upper bound)
  mpz_class degree_bound() const;

  bool contains(const std::vector<felt>& point) const;

  // Same system with coefficients embedded into GF(p^(e*k)).
  VarietySpec over_extension(std::uint32_t k) const;
};

struct MorphismSpec {
  std::size_t source_vars = 0;
  std::size_t target_vars = 0;
  std::vector<Poly> components;  // target_vars polynomials in the source variables

  int mdeg() const;
};

enum class SetOp { UNION, INTERSECT };

// Closed embedding of GL_n in the (n+1) x (n+1) matrix coordinates: border
// entries vanish and det(upper n x n corner) * corner = 1.
VarietySpec gln_embed(std::size_t n, Field field);

// Diagonal-torus and unitriangular subvarieties of the GL_n embedding.
VarietySpec torus_embed(std::size_t n, Field field);
VarietySpec unitriangular_embed(std::size_t n, Field field);

// INTERSECT concatenates the systems; UNION takes all pairwise products.
VarietySpec set_ops(const VarietySpec& V, const VarietySpec& W, SetOp op);

// System of W's polynomials composed with f, together with X's system.
VarietySpec preimage(const MorphismSpec& f, const VarietySpec& W, const VarietySpec& X);

// Embedded coordinates of an invertible n x n matrix: entries, zero border,
// det inverse in the corner; and the way back.
std::vector<felt> embed_coords(const MatrixOverF& m);
MatrixOverF matrix_from_embed_coords(const Field& f, std::size_t n, const std::vector<felt>& coords);

struct PointSet {
  Field field;  // the (possibly extended) field the points live over
  std::size_t ambient_vars = 0;
  std::vector<std::vector<felt>> points;  // lexicographically ordered tuples
};

// Exact F_{q^k}-points. Brute force requires (p^(e*k))^ambient_vars <= budget;
// parametrized enumerators only require the family scan to fit the budget.
PointSet points_over(const VarietySpec& V, std::uint32_t k, std::uint64_t budget);

struct DimensionEstimate {
  double slope = 0.0;
  long rounded = 0;
  double residual = 0.0;
  bool confident = false;  // residual below 0.1
  std::vector<std::pair<std::uint32_t, std::uint64_t>> counts;  // (k, |V(F_q^k)|)
};

// Least-squares slope of log_q |V(F_{q^k})| against k. A report heuristic:
// never used inside certified outputs.
DimensionEstimate empirical_dimension(const VarietySpec& V, const std::vector<std::uint32_t>& k_range,
                                      std::uint64_t budget);

}  // namespace jordanlab
