#pragma once

#include "jordanlab/ffarith/matrix.hpp"

namespace jordanlab {

enum class LieAlgebra { GL, SL };

// Standard basis of the chosen algebra inside n x n matrices. For sl_n the
// order is: E_ij (i < j, lexicographic), then H_i = E_ii - E_{i+1,i+1}, then
// E_ij (i > j); for n = 2 that is (e, h, f). For gl_n it is E_ij row-major.
std::vector<MatrixOverF> lie_basis(const Field& f, std::size_t n, LieAlgebra alg);

// Matrix of conjugation v -> g v g^-1 on the chosen basis. Ad(gh) = Ad(g)Ad(h).
// NotInvertibleError if g is singular; BadCharacteristicError for sl_n when
// the characteristic divides n (the demo realizations need faithfulness).
MatrixOverF adjoint_rep(const MatrixOverF& g, LieAlgebra alg);

}  // namespace jordanlab
