#include "jordanlab/varlab/variety.hpp"

namespace jordanlab {

mpz_class VarietySpec::degree_bound() const {
  mpz_class d = 1;
  for (const auto& p : polys) {
    int deg = p.degree();
    if (deg > 0) d *= deg;
  }
  return d;
}

bool VarietySpec::contains(const std::vector<felt>& point) const {
  for (const auto& p : polys) {
    if (p.eval(point) != 0) return false;
  }
  return true;
}

VarietySpec VarietySpec::over_extension(std::uint32_t k) const {
  if (k == 1) return *this;
  Field ext = Field::make(field.characteristic(), field.ext_degree() * k);
  FieldEmbedding emb(field, ext);
  VarietySpec out;
  out.field = ext;
  out.ambient_vars = ambient_vars;
  out.enumerator = enumerator;
  out.matrix_n = matrix_n;
  for (const auto& p : polys) out.polys.push_back(p.map_coeffs(emb));
  return out;
}

int MorphismSpec::mdeg() const {
  int m = 0;
  for (const auto& c : components) m = std::max(m, c.degree());
  return m;
}

namespace {

// index of x_{i,j} (1-based) in the (side x side) matrix coordinates
std::size_t vidx(std::size_t i, std::size_t j, std::size_t side) {
  return (i - 1) * side + (j - 1);
}

Poly det_poly_upper_corner(const Field& f, std::size_t n, std::size_t side) {
  // determinant of the upper-left n x n corner via Leibniz expansion over
  // permutations (n stays tiny here)
  std::size_t nvars = side * side;
  Poly det(f, nvars);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    // sign of the permutation
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    Poly term = Poly::constant(f, nvars, inversions % 2 == 0 ? f.one() : f.neg(f.one()));
    for (std::size_t i = 0; i < n; ++i) {
      term = term * Poly::variable(f, nvars, vidx(i + 1, perm[i] + 1, side));
    }
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

VarietySpec gln_embed(std::size_t n, Field field) {
  if (n < 1) throw BadInputError("gln_embed: n >= 1 required");
  const std::size_t side = n + 1;
  VarietySpec v;
  v.field = field;
  v.ambient_vars = side * side;
  v.enumerator = Enumerator::GLN;
  v.matrix_n = n;
  // border vanishes
  for (std::size_t i = 1; i <= n; ++i) {
    v.polys.push_back(Poly::variable(field, v.ambient_vars, vidx(i, side, side)));
    v.polys.push_back(Poly::variable(field, v.ambient_vars, vidx(side, i, side)));
  }
  // det(x|_{n x n}) * x_{n+1,n+1} = 1
  Poly det = det_poly_upper_corner(field, n, side);
  Poly corner = Poly::variable(field, v.ambient_vars, vidx(side, side, side));
  v.polys.push_back(det * corner - Poly::constant(field, v.ambient_vars, field.one()));
  return v;
}

VarietySpec torus_embed(std::size_t n, Field field) {
  VarietySpec v = gln_embed(n, field);
  v.enumerator = Enumerator::TORUS;
  const std::size_t side = n + 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i != j) v.polys.push_back(Poly::variable(field, v.ambient_vars, vidx(i, j, side)));
    }
  }
  return v;
}

VarietySpec unitriangular_embed(std::size_t n, Field field) {
  VarietySpec v = gln_embed(n, field);
  v.enumerator = Enumerator::UNITRIANGULAR;
  const std::size_t side = n + 1;
  Poly one = Poly::constant(field, v.ambient_vars, field.one());
  for (std::size_t i = 1; i <= n; ++i) {
    v.polys.push_back(Poly::variable(field, v.ambient_vars, vidx(i, i, side)) - one);
    for (std::size_t j = 1; j < i; ++j) {
      v.polys.push_back(Poly::variable(field, v.ambient_vars, vidx(i, j, side)));
    }
  }
  return v;
}

VarietySpec set_ops(const VarietySpec& V, const VarietySpec& W, SetOp op) {
  if (V.ambient_vars != W.ambient_vars || !(V.field == W.field)) {
    throw AmbientMismatchError("set_ops: ambient spaces differ");
  }
  VarietySpec out;
  out.field = V.field;
  out.ambient_vars = V.ambient_vars;
  if (op == SetOp::INTERSECT) {
    out.polys = V.polys;
    out.polys.insert(out.polys.end(), W.polys.begin(), W.polys.end());
    // an enumerator of either side still covers the intersection
    if (V.enumerator != Enumerator::BRUTE) {
      out.enumerator = V.enumerator;
      out.matrix_n = V.matrix_n;
    } else if (W.enumerator != Enumerator::BRUTE) {
      out.enumerator = W.enumerator;
      out.matrix_n = W.matrix_n;
    }
  } else {
    for (const auto& p : V.polys) {
      for (const auto& q : W.polys) out.polys.push_back(p * q);
    }
  }
  return out;
}

VarietySpec preimage(const MorphismSpec& f, const VarietySpec& W, const VarietySpec& X) {
  if (f.target_vars != W.ambient_vars || f.source_vars != X.ambient_vars) {
    throw AmbientMismatchError("preimage: dimensions incompatible");
  }
  VarietySpec out;
  out.field = X.field;
  out.ambient_vars = X.ambient_vars;
  for (const auto& p : W.polys) out.polys.push_back(p.compose(f.components));
  out.polys.insert(out.polys.end(), X.polys.begin(), X.polys.end());
  out.enumerator = X.enumerator;
  out.matrix_n = X.matrix_n;
  return out;
}

std::vector<felt> embed_coords(const MatrixOverF& m) {
  const Field& f = m.field();
  const std::size_t n = m.side();
  const std::size_t side = n + 1;
  std::vector<felt> out(side * side, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * side + j] = m.at(i, j);
  }
  out[side * side - 1] = f.inv(m.det());
  return out;
}

MatrixOverF matrix_from_embed_coords(const Field& f, std::size_t n, const std::vector<felt>& coords) {
  const std::size_t side = n + 1;
  if (coords.size() != side * side) throw BadInputError("embedded coordinate tuple has wrong length");
  MatrixOverF m(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = coords[i * side + j];
  }
  return m;
}

}  // namespace jordanlab
