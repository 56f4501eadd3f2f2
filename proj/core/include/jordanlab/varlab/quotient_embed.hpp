#pragma once

#include "jordanlab/varlab/variety.hpp"

namespace jordanlab {

struct QuotientEmbedCaps {
  std::size_t monomial_cap = 512;    // dimension of the degree-<=Delta monomial space
  std::size_t invariant_cap = 128;   // dimension of the translation-invariant subspace
  std::size_t wedge_cap = 1024;      // dimension of the wedge space
  std::uint64_t point_budget = 100000000;
  std::size_t pair_check_cap = 4000000;  // full homomorphism check up to this many pairs
};

// Output of the executable quotient construction on a small group variety G
// with a normal subgroup H cut by h_polys (degrees <= Delta) inside G.
struct QuotientEmbedResult {
  std::size_t delta = 0;
  // monomial count in the full matrix coordinates actually used, and the
  // smaller n^2-variable count reported alongside for reference
  mpz_class monomial_count;
  mpz_class monomial_count_n2;
  std::size_t dim_invariant = 0;  // translation-invariant subspace containing the h_polys
  std::size_t dim_vanishing = 0;  // its subspace of functions vanishing on H
  std::size_t dim_wedge = 0;
  std::vector<std::vector<felt>> group_points;  // embedded coordinates, enumeration order
  std::vector<MatrixOverF> beta;                // conjugation representation per point
  std::vector<std::size_t> kernel_point_indices;
  std::size_t h_point_count = 0;
  bool homomorphism_checked = false;
  bool kernel_equals_h_points = false;
};

// Runs the construction over the F_q-points of G: monomial space, right
// translations, invariant subspace, wedge line, conjugation representation.
// Checked guarantees: beta is a homomorphism and its kernel on points is
// exactly H(F_q). Throws CapExceededError when a cap is hit and
// NotAGroupPointError if the supplied points do not form a group.
QuotientEmbedResult quotient_embed_tiny(const VarietySpec& G, const std::vector<Poly>& h_polys,
                                        const QuotientEmbedCaps& caps = {});

}  // namespace jordanlab
