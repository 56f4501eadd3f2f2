#include "jordanlab/varlab/adjoint.hpp"

namespace jordanlab {

std::vector<MatrixOverF> lie_basis(const Field& f, std::size_t n, LieAlgebra alg) {
  std::vector<MatrixOverF> basis;
  if (alg == LieAlgebra::GL) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        MatrixOverF e(f, n);
        e.at(i, j) = 1;
        basis.push_back(e);
      }
    }
    return basis;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      MatrixOverF e(f, n);
      e.at(i, j) = 1;
      basis.push_back(e);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    MatrixOverF h(f, n);
    h.at(i, i) = 1;
    h.at(i + 1, i + 1) = f.neg(1);
    basis.push_back(h);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      MatrixOverF e(f, n);
      e.at(i, j) = 1;
      basis.push_back(e);
    }
  }
  return basis;
}

namespace {

// Coordinates of a trace-zero matrix in the sl_n basis above: off-diagonal
// entries directly, and partial sums d_1 + ... + d_i for the H_i.
std::vector<felt> sl_coords(const MatrixOverF& m) {
  const Field& f = m.field();
  const std::size_t n = m.side();
  std::vector<felt> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(m.at(i, j));
  }
  felt acc = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    acc = f.add(acc, m.at(i, i));
    out.push_back(acc);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) out.push_back(m.at(i, j));
  }
  return out;
}

std::vector<felt> gl_coords(const MatrixOverF& m) {
  std::vector<felt> out;
  const std::size_t n = m.side();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(m.at(i, j));
  }
  return out;
}

}  // namespace

MatrixOverF adjoint_rep(const MatrixOverF& g, LieAlgebra alg) {
  const Field& f = g.field();
  const std::size_t n = g.side();
  if (g.det() == 0) throw NotInvertibleError("adjoint_rep: singular matrix");
  if (alg == LieAlgebra::SL && n % f.characteristic() == 0) {
    throw BadCharacteristicError("adjoint_rep: sl_n needs the characteristic coprime to n");
  }
  std::vector<MatrixOverF> basis = lie_basis(f, n, alg);
  const std::size_t dim = basis.size();
  MatrixOverF ginv = g.inverse();
  MatrixOverF ad(f, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    MatrixOverF image = g * basis[col] * ginv;
    std::vector<felt> coords = alg == LieAlgebra::SL ? sl_coords(image) : gl_coords(image);
    for (std::size_t row = 0; row < dim; ++row) ad.at(row, col) = coords[row];
  }
  return ad;
}

}  // namespace jordanlab
