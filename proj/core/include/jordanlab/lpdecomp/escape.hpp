#pragma once

#include "jordanlab/groupengine/group.hpp"
#include "jordanlab/towernum/tower.hpp"
#include "jordanlab/varlab/variety.hpp"

namespace jordanlab {

struct EscapeResult {
  enum class Branch { SMALL, SUBGROUP } branch = Branch::SMALL;
  Tower degree_bound;            // deg(V)^(dim(V)+1)
  mpz_class degree_bound_value;  // evaluated
  // SMALL: |Gamma| (or the collapsed point set) is within the bound
  mpz_class witness_size;
  // SUBGROUP: stabilizer data
  std::size_t translates_used = 0;      // |S_i|
  std::size_t stabilized_point_count = 0;  // |V_i(F_{q^K})|
  bool gamma_contained_verified = false;
  std::uint32_t k_test = 2;
  bool dim_was_estimated = false;
};

// Escape-from-subvariety iteration on point sets over F_{q^K}: intersect
// translates V·gamma until either the point set is within the tracked degree
// bound (SMALL) or it is Gamma-stable (SUBGROUP, with Gamma <= Stab(V_i)
// verified on points). dim_v < 0 lets the dimension be estimated empirically
// (flagged in the result). Throws NotContainedError if Gamma is not inside V.
EscapeResult escape(const MatrixGroup& gamma, const VarietySpec& v, int dim_v,
                    std::uint32_t k_test = 2, std::uint64_t budget = 100000000);

}  // namespace jordanlab
