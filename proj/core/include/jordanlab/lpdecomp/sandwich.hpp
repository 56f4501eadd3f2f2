#pragma once

#include "jordanlab/groupengine/group.hpp"
#include "jordanlab/towernum/tower.hpp"

namespace jordanlab {

struct SandwichReport {
  mpz_class ambient_order, fixed_order, derived_order, gamma_order;
  bool gamma_inside_fixed = false;
  bool derived_inside_gamma = false;
  // order bounds (q - 1)^d <= |G^F| <= q^d for the split form
  mpz_class lower_bound, upper_bound;
  bool lower_ok = false, upper_ok = false;
};

// Computes the fixed points of the entrywise q-power map on the enumerated
// ambient group, their derived subgroup, and checks the two inclusions
// [G^F, G^F] <= Gamma <= G^F together with the order bounds (dim_g is the
// ambient algebraic group dimension). Gamma must live over the ambient's
// field; InclusionFailedError carries a witness element on failure.
SandwichReport frobenius_sandwich(const MatrixGroup& gamma, const MatrixGroup& ambient,
                                  std::uint64_t q, std::uint64_t dim_g);

}  // namespace jordanlab
