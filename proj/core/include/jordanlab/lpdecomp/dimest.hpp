#pragma once

#include "jordanlab/groupengine/group.hpp"
#include "jordanlab/lpdecomp/classify.hpp"
#include "jordanlab/towernum/tower.hpp"

namespace jordanlab {

enum class DimestFamily { SL2, PGL2 };
enum class DimestKind { UNIPOTENT_CONE, SPLIT_TORUS, NONSPLIT_TORUS_CLASS, CONJ_CLASS };

struct DimestRow {
  std::uint64_t q = 0;
  std::string label;           // class representative for CONJ_CLASS sweeps
  mpz_class gamma_order;
  mpz_class meet_count;        // |Gamma ∩ V|
  std::size_t dim_v = 0;
  std::size_t dim_g = 3;
  mpz_class deg_v;
  std::string constant_text;   // the instantiated estimate constant
  bool inequality_holds = false;   // |Gamma ∩ V| <= C |Gamma|^(dim V / dim G), integerized
  double fitted_exponent = 0.0;    // log|Gamma ∩ V| / log|Gamma|
  // centralizer kinds: two-sided bounds and the exact orbit-stabilizer identity
  bool has_centralizer_bounds = false;
  bool phi_lower_ok = false, phi_upper_ok = false;
  mpz_class class_size;
  bool orbit_stabilizer_exact = false;
};

struct DimestOptions {
  std::size_t group_cap = MatrixGroup::kDefaultCap;
  CompareOptions cmp{};
};

// Per-q census of |Gamma ∩ V| against the dimensional-estimate constant, with
// the two-sided centralizer bounds for the torus/class kinds. CONJ_CLASS runs
// over every conjugacy-class representative.
std::vector<DimestRow> dimest_census(DimestFamily family, DimestKind kind,
                                     const std::vector<std::uint64_t>& q_list,
                                     const DimestOptions& opts = {});

}  // namespace jordanlab
