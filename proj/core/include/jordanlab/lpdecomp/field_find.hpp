#pragma once

#include "jordanlab/groupengine/group.hpp"
#include "jordanlab/lpdecomp/classify.hpp"

namespace jordanlab {

struct FieldFindResult {
  std::uint64_t q = 0;                  // |Gamma ∩ V|, verified a power of p
  std::size_t regular_unipotent = 0;    // index of the regular unipotent used
  MatrixOverF base_change;              // conjugates it to a single upper Jordan block
  std::vector<felt> corner_values;      // the values in the (1, n) corner, sorted
  std::size_t witness_count = 0;        // = q
};

// Finds the field underlying the minimal unipotent elements of Gamma: picks a
// regular unipotent, conjugates it to upper-triangular Jordan form through its
// kernel flag, intersects Gamma with the highest-root subgroup (nonzero entry
// only in the (1, n) corner), and verifies the corner values form an additive
// subgroup of p-power order. Throws NoRegularUnipotentError / NotAFieldError.
FieldFindResult find_field_typeA(const MatrixGroup& gamma, const GroupRealization& real);

}  // namespace jordanlab
