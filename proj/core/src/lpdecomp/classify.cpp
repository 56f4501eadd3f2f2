#include "jordanlab/lpdecomp/classify.hpp"

#include <numeric>

namespace jordanlab {

namespace {

std::uint64_t matrix_order(const MatrixOverF& g) {
  MatrixOverF cur = g;
  std::uint64_t n = 1;
  while (!cur.is_identity()) {
    cur = cur * g;
    ++n;
  }
  return n;
}

// x^-1 mod m
std::uint64_t inv_mod(std::uint64_t x, std::uint64_t m) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(x % m);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::swap(t, newt);
    newt -= q * t;
    std::swap(r, newr);
    newr -= q * r;
  }
  if (r != 1) throw Error("inv_mod: arguments not coprime");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

}  // namespace

JordanPair jordan_chevalley(const MatrixOverF& g) {
  if (g.det() == 0) throw NotInvertibleError("jordan_chevalley: singular matrix");
  const std::uint64_t p = g.field().characteristic();
  JordanPair out{g, g, 0, 0, 0};
  std::uint64_t ord = matrix_order(g);
  out.order_g = ord;
  std::uint64_t pa = 1, m = ord;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  if (pa == 1) {
    out.s = g;
    out.u = MatrixOverF::identity(g.field(), g.side());
  } else if (m == 1) {
    out.s = MatrixOverF::identity(g.field(), g.side());
    out.u = g;
  } else {
    // u = g^(m m'), s = g^(p^a c) with m m' = 1 mod p^a and p^a c = 1 mod m
    std::uint64_t mp = inv_mod(m, pa);
    std::uint64_t c = inv_mod(pa, m);
    out.u = g.pow(m * mp);
    out.s = g.pow(pa * c);
  }
  out.order_s = matrix_order(out.s);
  out.order_u = matrix_order(out.u);
  return out;
}

MatrixOverF adjoint_action(const MatrixOverF& g, const GroupRealization& real) {
  switch (real.family) {
    case RealizationFamily::GL:
      return adjoint_rep(g, LieAlgebra::GL);
    case RealizationFamily::SL:
      return adjoint_rep(g, LieAlgebra::SL);
    case RealizationFamily::PGL_ADJOINT:
      return g;  // the element is already the adjoint action on the Lie algebra
  }
  throw BadInputError("adjoint_action: unknown realization");
}

ElementClass classify_element(const MatrixOverF& g, const GroupRealization& real) {
  if (g.side() != real.matrix_side()) {
    throw BadInputError("classify_element: matrix side does not match the realization");
  }
  const Field& f = g.field();
  const std::uint64_t p = f.characteristic();
  ElementClass out;

  MatrixOverF diff = g - MatrixOverF::identity(f, g.side());
  MatrixOverF nil = diff;
  bool unipotent = false;
  for (std::size_t i = 0; i < g.side() && !unipotent; ++i) {
    bool zero = true;
    for (std::size_t r = 0; r < g.side() && zero; ++r) {
      for (std::size_t c = 0; c < g.side(); ++c) {
        if (nil.at(r, c) != 0) {
          zero = false;
          break;
        }
      }
    }
    if (zero) {
      unipotent = true;
      break;
    }
    nil = nil * diff;
  }
  out.is_unipotent = unipotent;

  std::uint64_t ord = matrix_order(g);
  out.is_semisimple = (ord % p) != 0;
  if (out.is_unipotent && out.is_semisimple) {
    // only the identity is both
    out.is_regular = false;
  }

  MatrixOverF ad = adjoint_action(g, real);
  out.adjoint_charpoly = ad.charpoly();
  const std::size_t r = real.rank();
  out.hasse_value = out.adjoint_charpoly.hasse_derivative(static_cast<std::uint32_t>(r)).eval_univ(f.one());
  MatrixOverF fixed = ad - MatrixOverF::identity(f, ad.side());
  out.fixed_space_dim = ad.side() - fixed.rank();

  if (out.is_unipotent) {
    // type A: regular unipotent means a single Jordan block, i.e. (g - I) has
    // the largest possible rank
    out.is_regular = !g.is_identity() && diff.rank() == g.side() - 1;
  } else if (out.is_semisimple) {
    out.is_regular = out.hasse_value != 0;
  } else {
    // mixed: regularity of the semisimple part
    JordanPair jc = jordan_chevalley(g);
    MatrixOverF ads = adjoint_action(jc.s, real);
    out.is_regular =
        ads.charpoly().hasse_derivative(static_cast<std::uint32_t>(r)).eval_univ(f.one()) != 0;
  }
  return out;
}

CensusReport unipotent_census(const MatrixGroup& gamma, const GroupRealization& real) {
  if (real.family == RealizationFamily::PGL_ADJOINT &&
      real.n % gamma.field().characteristic() == 0) {
    throw UnsupportedTypeError("unipotent_census: adjoint realization needs p coprime to n");
  }
  CensusReport out;
  const MatrixOverF id = MatrixOverF::identity(gamma.field(), gamma.matrix_side());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const MatrixOverF& g = gamma.element(i);
    MatrixOverF diff = g - id;
    // unipotent iff the order is a p-power iff (g - I)^side = 0; the rank test
    // doubles as the regularity criterion
    MatrixOverF nil = diff;
    for (std::size_t k = 1; k < gamma.matrix_side(); ++k) nil = nil * diff;
    bool unip = true;
    for (std::size_t r = 0; r < gamma.matrix_side() && unip; ++r) {
      for (std::size_t c = 0; c < gamma.matrix_side(); ++c) {
        if (nil.at(r, c) != 0) {
          unip = false;
          break;
        }
      }
    }
    if (!unip) continue;
    ++out.count_unipotent;
    if (diff.rank() == gamma.matrix_side() - 1) ++out.count_regular_unipotent;
  }
  if (gamma.size() == 1) out.degenerate = true;
  out.ratio = out.count_unipotent == 0
                  ? 0.0
                  : static_cast<double>(out.count_regular_unipotent) / static_cast<double>(out.count_unipotent);
  out.half_inequality_holds = 2 * out.count_regular_unipotent >= out.count_unipotent &&
                              out.count_unipotent >= 1;
  return out;
}

felt primitive_element(const Field& f) {
  for (std::uint64_t x = 1; x < f.size(); ++x) {
    if (f.mult_order(static_cast<felt>(x)) == f.size() - 1) return static_cast<felt>(x);
  }
  throw Error("primitive_element: none found (impossible)");
}

namespace {

MatrixOverF m2(const Field& f, felt a, felt b, felt c, felt d) {
  MatrixOverF m(f, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

std::vector<MatrixOverF> sl2_generators(const Field& f) {
  // upper transvections over an additive basis of the field, plus one lower
  std::vector<MatrixOverF> gens;
  felt t = f.ext_degree() == 1 ? 1 : static_cast<felt>(f.characteristic());  // the class of t
  felt power = 1;
  for (std::uint32_t i = 0; i < f.ext_degree(); ++i) {
    gens.push_back(m2(f, 1, power, 0, 1));
    power = f.mul(power, t);
  }
  gens.push_back(m2(f, 1, 0, 1, 1));
  return gens;
}

}  // namespace

std::shared_ptr<const MatrixGroup> make_sl2(const Field& f, std::size_t cap) {
  return MatrixGroup::close(sl2_generators(f), cap);
}

std::shared_ptr<const MatrixGroup> make_gl2(const Field& f, std::size_t cap) {
  auto gens = sl2_generators(f);
  gens.push_back(m2(f, primitive_element(f), 0, 0, 1));
  return MatrixGroup::close(gens, cap);
}

std::shared_ptr<const MatrixGroup> make_pgl2_adjoint(const Field& f, std::size_t cap) {
  if (f.characteristic() == 2) {
    throw BadCharacteristicError("make_pgl2_adjoint: needs odd characteristic");
  }
  auto gens = sl2_generators(f);
  gens.push_back(m2(f, primitive_element(f), 0, 0, 1));
  std::vector<MatrixOverF> ad_gens;
  for (const auto& g : gens) ad_gens.push_back(adjoint_rep(g, LieAlgebra::SL));
  return MatrixGroup::close(ad_gens, cap);
}

std::shared_ptr<const MatrixGroup> make_psl2_adjoint(const Field& f, std::size_t cap) {
  if (f.characteristic() == 2) {
    throw BadCharacteristicError("make_psl2_adjoint: needs odd characteristic");
  }
  std::vector<MatrixOverF> ad_gens;
  for (const auto& g : sl2_generators(f)) ad_gens.push_back(adjoint_rep(g, LieAlgebra::SL));
  return MatrixGroup::close(ad_gens, cap);
}

std::shared_ptr<const MatrixGroup> make_borel2(const Field& f, std::size_t cap) {
  std::vector<MatrixOverF> gens;
  felt t = f.ext_degree() == 1 ? 1 : static_cast<felt>(f.characteristic());
  felt power = 1;
  for (std::uint32_t i = 0; i < f.ext_degree(); ++i) {
    gens.push_back(m2(f, 1, power, 0, 1));
    power = f.mul(power, t);
  }
  felt prim = primitive_element(f);
  gens.push_back(m2(f, prim, 0, 0, 1));
  gens.push_back(m2(f, 1, 0, 0, prim));
  return MatrixGroup::close(gens, cap);
}

std::shared_ptr<const MatrixGroup> make_unitriangular(const Field& f, std::size_t n, std::size_t cap) {
  std::vector<MatrixOverF> gens;
  felt t = f.ext_degree() == 1 ? 1 : static_cast<felt>(f.characteristic());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      felt power = 1;
      for (std::uint32_t k = 0; k < f.ext_degree(); ++k) {
        MatrixOverF m = MatrixOverF::identity(f, n);
        m.at(i, j) = power;
        gens.push_back(m);
        power = f.mul(power, t);
      }
    }
  }
  if (gens.empty()) gens.push_back(MatrixOverF::identity(f, n));
  return MatrixGroup::close(gens, cap);
}

}  // namespace jordanlab
