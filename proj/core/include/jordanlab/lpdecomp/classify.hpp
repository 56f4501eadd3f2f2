#pragma once

#include "jordanlab/groupengine/group.hpp"
#include "jordanlab/varlab/adjoint.hpp"

namespace jordanlab {

// How a finite matrix group sits inside its ambient algebraic group. The
// regularity tests below are implemented for these type A realizations.
enum class RealizationFamily { GL, SL, PGL_ADJOINT };

struct GroupRealization {
  RealizationFamily family = RealizationFamily::GL;
  std::size_t n = 0;  // natural module size: GL_n, SL_n, PGL_n
  std::size_t rank() const { return family == RealizationFamily::GL ? n : n - 1; }
  std::size_t dim() const {
    switch (family) {
      case RealizationFamily::GL: return n * n;
      case RealizationFamily::SL: return n * n - 1;
      case RealizationFamily::PGL_ADJOINT: return n * n - 1;
    }
    return 0;
  }
  // side length of the stored matrices
  std::size_t matrix_side() const {
    return family == RealizationFamily::PGL_ADJOINT ? n * n - 1 : n;
  }
};

// Multiplicative Jordan decomposition g = s u = u s with s of order coprime
// to p and u of p-power order ((u - I)^side = 0).
struct JordanPair {
  MatrixOverF s, u;
  std::uint64_t order_g = 0, order_s = 0, order_u = 0;
};

JordanPair jordan_chevalley(const MatrixOverF& g);

struct ElementClass {
  bool is_unipotent = false;
  bool is_semisimple = false;
  bool is_regular = false;
  // evidence
  Poly adjoint_charpoly;     // of the adjoint action matrix
  felt hasse_value = 0;      // r-th Hasse derivative of the charpoly at 1
  std::size_t fixed_space_dim = 0;  // dim ker(Ad - 1), the multiplicity oracle input
};

// Classification per the realization: unipotent iff (g-I)^side = 0; semisimple
// iff p does not divide the order; regular semisimple via the Hasse-derivative
// test on the adjoint characteristic polynomial at the realization's rank;
// regular unipotent via the single-Jordan-block criterion.
ElementClass classify_element(const MatrixOverF& g, const GroupRealization& real);

// Adjoint action matrix of g in the given realization (for PGL_ADJOINT the
// element already acts on the Lie algebra).
MatrixOverF adjoint_action(const MatrixOverF& g, const GroupRealization& real);

struct CensusReport {
  std::size_t count_unipotent = 0;
  std::size_t count_regular_unipotent = 0;
  double ratio = 0.0;  // run / un
  bool half_inequality_holds = false;  // count_run >= count_un / 2
  bool degenerate = false;             // trivial group: only the identity
};

// Classifies every element of the group. UnsupportedTypeError when the
// realization does not support regularity tests.
CensusReport unipotent_census(const MatrixGroup& gamma, const GroupRealization& real);

// --- standard group constructions used across the toolkit and the CLI ---
std::shared_ptr<const MatrixGroup> make_sl2(const Field& f, std::size_t cap = MatrixGroup::kDefaultCap);
std::shared_ptr<const MatrixGroup> make_gl2(const Field& f, std::size_t cap = MatrixGroup::kDefaultCap);
std::shared_ptr<const MatrixGroup> make_pgl2_adjoint(const Field& f, std::size_t cap = MatrixGroup::kDefaultCap);
std::shared_ptr<const MatrixGroup> make_psl2_adjoint(const Field& f, std::size_t cap = MatrixGroup::kDefaultCap);
std::shared_ptr<const MatrixGroup> make_borel2(const Field& f, std::size_t cap = MatrixGroup::kDefaultCap);
std::shared_ptr<const MatrixGroup> make_unitriangular(const Field& f, std::size_t n,
                                                      std::size_t cap = MatrixGroup::kDefaultCap);

// Least multiplicative generator of the field (deterministic).
felt primitive_element(const Field& f);

}  // namespace jordanlab
