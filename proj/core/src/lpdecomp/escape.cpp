#include "jordanlab/lpdecomp/escape.hpp"

#include <algorithm>
#include <set>

namespace jordanlab {

namespace {

// group element -> ambient coordinates of the variety (plain n^2 entries or
// the embedded (n+1)^2 tuple)
std::vector<felt> coords_of(const MatrixOverF& m, std::size_t ambient_vars) {
  const std::size_t n = m.side();
  if (ambient_vars == n * n) {
    std::vector<felt> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.push_back(m.at(i, j));
    }
    return out;
  }
  if (ambient_vars == (n + 1) * (n + 1)) return embed_coords(m);
  throw AmbientMismatchError("escape: variety coordinates do not match the group's matrix size");
}

MatrixOverF matrix_of(const Field& f, std::size_t n, std::size_t ambient_vars,
                      const std::vector<felt>& coords) {
  if (ambient_vars == n * n) {
    MatrixOverF m(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = coords[i * n + j];
    }
    return m;
  }
  return matrix_from_embed_coords(f, n, coords);
}

}  // namespace

EscapeResult escape(const MatrixGroup& gamma, const VarietySpec& v, int dim_v,
                    std::uint32_t k_test, std::uint64_t budget) {
  if (!(gamma.field() == v.field)) throw AmbientMismatchError("escape: field mismatch");
  const std::size_t n = gamma.matrix_side();

  // precondition: Gamma inside V, checked by evaluation over the base field
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (!v.contains(coords_of(gamma.element(i), v.ambient_vars))) {
      throw NotContainedError("escape: Gamma element outside V: " + gamma.element(i).to_string());
    }
  }

  EscapeResult out;
  out.k_test = k_test;
  int dim = dim_v;
  if (dim < 0) {
    std::vector<std::uint32_t> ks;
    for (std::uint32_t k = 1; k <= std::max<std::uint32_t>(k_test, 2); ++k) ks.push_back(k);
    dim = static_cast<int>(empirical_dimension(v, ks, budget).rounded);
    out.dim_was_estimated = true;
  }
  Tower degv = tlit(v.degree_bound());
  out.degree_bound = tpow(degv, tlit(std::uint64_t(dim) + 1));
  out.degree_bound_value = eval_exact(out.degree_bound, 1 << 20);

  // first disjunct: the group itself is already small
  if (mpz_class(static_cast<unsigned long>(gamma.size())) <= out.degree_bound_value) {
    out.branch = EscapeResult::Branch::SMALL;
    out.witness_size = mpz_class(static_cast<unsigned long>(gamma.size()));
    return out;
  }

  // point sets over the test extension
  PointSet ps = points_over(v, k_test, budget);
  Field ext = ps.field;
  FieldEmbedding emb(gamma.field(), ext);
  std::vector<MatrixOverF> gamma_ext;
  gamma_ext.reserve(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) gamma_ext.push_back(gamma.element(i).map_entries(emb));

  std::set<std::vector<felt>> current(ps.points.begin(), ps.points.end());
  out.translates_used = 1;  // V itself
  bool changed = true;
  while (changed) {
    changed = false;
    if (mpz_class(static_cast<unsigned long>(current.size())) <= out.degree_bound_value) {
      out.branch = EscapeResult::Branch::SMALL;
      out.witness_size = mpz_class(static_cast<unsigned long>(current.size()));
      return out;
    }
    for (const auto& g : gamma_ext) {
      // current * g
      std::set<std::vector<felt>> translated;
      for (const auto& pt : current) {
        MatrixOverF m = matrix_of(ext, n, v.ambient_vars, pt) * g;
        translated.insert(coords_of(m, v.ambient_vars));
      }
      if (translated != current) {
        std::set<std::vector<felt>> inter;
        std::set_intersection(current.begin(), current.end(), translated.begin(), translated.end(),
                              std::inserter(inter, inter.begin()));
        current = std::move(inter);
        ++out.translates_used;
        changed = true;
        break;
      }
    }
  }
  // Gamma-stable: the stabilizer branch; containment was just verified by the
  // very loop exit (no gamma moves the set)
  out.branch = EscapeResult::Branch::SUBGROUP;
  out.stabilized_point_count = current.size();
  out.gamma_contained_verified = true;
  out.witness_size = mpz_class(static_cast<unsigned long>(current.size()));
  return out;
}

}  // namespace jordanlab
