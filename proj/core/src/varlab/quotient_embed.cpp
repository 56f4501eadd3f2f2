#include "jordanlab/varlab/quotient_embed.hpp"

#include <algorithm>
#include <map>

namespace jordanlab {

namespace {

using Vec = std::vector<felt>;
using Mat = std::vector<Vec>;  // rows

// Reduced row echelon basis maintained incrementally; pivot columns are the
// first nonzero coordinates, rows stay normalized.
struct RowSpace {
  const Field& f;
  std::size_t width;
  std::vector<Vec> rows;           // rref basis
  std::vector<std::size_t> pivots;

  explicit RowSpace(const Field& f_, std::size_t w) : f(f_), width(w) {}

  // Reduce v against the basis; returns the residual.
  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      felt c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width; ++j) v[j] = f.sub(v[j], f.mul(c, rows[r][j]));
    }
    return v;
  }

  // Returns true if v enlarged the space.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t p = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (v[j] != 0) {
        p = j;
        break;
      }
    }
    if (p == width) return false;
    felt inv = f.inv(v[p]);
    for (std::size_t j = 0; j < width; ++j) v[j] = f.mul(v[j], inv);
    // back-substitute into existing rows
    for (std::size_t r = 0; r < rows.size(); ++r) {
      felt c = rows[r][p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(c, v[j]));
    }
    // keep rows ordered by pivot
    std::size_t at = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (pivots[r] > p) {
        at = r;
        break;
      }
    }
    rows.insert(rows.begin() + at, std::move(v));
    pivots.insert(pivots.begin() + at, p);
    return true;
  }

  // Coordinates of v in this basis (throws if v is outside the space).
  Vec coords(const Vec& v) const {
    Vec out(rows.size(), 0);
    Vec w = v;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      felt c = w[pivots[r]];
      out[r] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < width; ++j) w[j] = f.sub(w[j], f.mul(c, rows[r][j]));
    }
    for (felt x : w) {
      if (x != 0) throw Error("quotient_embed: vector escaped the invariant subspace");
    }
    return out;
  }
};

std::vector<std::vector<std::uint32_t>> monomials_up_to(std::size_t nvars, std::size_t delta) {
  // graded lexicographic enumeration
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(nvars, 0);
  out.push_back(cur);
  for (std::size_t d = 1; d <= delta; ++d) {
    // all exponent vectors of total degree d
    std::vector<std::uint32_t> exps(nvars, 0);
    exps[nvars - 1] = static_cast<std::uint32_t>(d);
    for (;;) {
      out.push_back(exps);
      // next composition of d into nvars parts (colex-style walk)
      std::size_t i = nvars - 1;
      while (i > 0 && exps[i] == 0) --i;
      if (i == 0) break;
      std::uint32_t v = exps[i];
      exps[i] = 0;
      exps[i - 1] += 1;
      exps[nvars - 1] = v - 1;
    }
  }
  return out;
}

mpz_class binom_z(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// k x k minor determinant of m at the given row/column subsets.
felt minor_det(const Field& f, const Mat& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  Mat sub(k, Vec(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rows[i]][cols[j]];
  }
  felt det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && sub[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(sub[piv], sub[c]);
      det = f.neg(det);
    }
    det = f.mul(det, sub[c][c]);
    felt inv = f.inv(sub[c][c]);
    for (std::size_t r = c + 1; r < k; ++r) {
      felt factor = f.mul(sub[r][c], inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < k; ++j) sub[r][j] = f.sub(sub[r][j], f.mul(factor, sub[c][j]));
    }
  }
  return det;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] != i + n - k) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace

QuotientEmbedResult quotient_embed_tiny(const VarietySpec& G, const std::vector<Poly>& h_polys,
                                        const QuotientEmbedCaps& caps) {
  const Field& f = G.field;
  const std::size_t nvars = G.ambient_vars;
  const std::size_t side = G.matrix_n + 1;
  if (G.matrix_n == 0 || nvars != side * side) {
    throw BadInputError("quotient_embed_tiny: G must live in the embedded matrix coordinates");
  }

  QuotientEmbedResult out;
  // Delta: maximum degree of the subgroup equations (at least 1)
  int delta = 1;
  for (const auto& p : h_polys) delta = std::max(delta, p.degree());
  out.delta = static_cast<std::size_t>(delta);

  out.monomial_count = binom_z(nvars + out.delta, out.delta);
  out.monomial_count_n2 = binom_z(G.matrix_n * G.matrix_n + out.delta, out.delta);
  if (out.monomial_count > mpz_class(static_cast<unsigned long>(caps.monomial_cap))) {
    throw CapExceededError("quotient_embed_tiny: monomial space dimension " +
                           out.monomial_count.get_str() + " exceeds cap");
  }

  PointSet pts = points_over(G, 1, caps.point_budget);
  out.group_points = pts.points;
  const std::size_t npts = out.group_points.size();
  if (npts == 0) throw NoPointsError("quotient_embed_tiny: G has no F_q-points");

  // group structure on the points (indices), with inverses
  std::map<std::vector<felt>, std::size_t> point_index;
  for (std::size_t i = 0; i < npts; ++i) point_index[out.group_points[i]] = i;
  std::vector<MatrixOverF> mats;
  for (const auto& pt : out.group_points) {
    mats.push_back(matrix_from_embed_coords(f, G.matrix_n, pt));
  }
  std::vector<std::size_t> inv_of(npts);
  for (std::size_t i = 0; i < npts; ++i) {
    auto it = point_index.find(embed_coords(mats[i].inverse()));
    if (it == point_index.end()) {
      throw NotAGroupPointError("quotient_embed_tiny: points not closed under inversion");
    }
    inv_of[i] = it->second;
  }
  std::vector<std::vector<std::size_t>> mul_tab;
  if (npts * npts <= caps.pair_check_cap) {
    mul_tab.assign(npts, std::vector<std::size_t>(npts));
    for (std::size_t i = 0; i < npts; ++i) {
      for (std::size_t j = 0; j < npts; ++j) {
        auto it = point_index.find(embed_coords(mats[i] * mats[j]));
        if (it == point_index.end()) {
          throw NotAGroupPointError("quotient_embed_tiny: points not closed under product");
        }
        mul_tab[i][j] = it->second;
      }
    }
  }

  // monomial space L
  auto monos = monomials_up_to(nvars, out.delta);
  const std::size_t M = monos.size();
  std::map<std::vector<std::uint32_t>, std::size_t> mono_index;
  for (std::size_t i = 0; i < M; ++i) mono_index[monos[i]] = i;
  auto poly_to_vec = [&](const Poly& p) {
    Vec v(M, 0);
    for (const auto& [mono, c] : p.terms()) {
      auto it = mono_index.find(mono);
      if (it == mono_index.end()) {
        throw BadInputError("quotient_embed_tiny: subgroup polynomial exceeds degree bound");
      }
      v[it->second] = c;
    }
    return v;
  };

  // right translation rho_g on L: monomial -> polynomial in x of the same degree
  auto rho_matrix = [&](std::size_t gi) {
    const auto& gpt = out.group_points[gi];
    // substitution x_{ij} -> sum_k x_{ik} g_{kj}
    std::vector<Poly> subs;
    subs.reserve(nvars);
    for (std::size_t i = 0; i < side; ++i) {
      for (std::size_t j = 0; j < side; ++j) {
        Poly s(f, nvars);
        for (std::size_t k = 0; k < side; ++k) {
          felt gkj = gpt[k * side + j];
          if (gkj == 0) continue;
          s = s + Poly::variable(f, nvars, i * side + k) *
                      Poly::constant(f, nvars, gkj);
        }
        subs.push_back(s);
      }
    }
    Mat rho(M, Vec(M, 0));  // column per monomial
    for (std::size_t c = 0; c < M; ++c) {
      Poly mono(f, nvars);
      mono.add_term(monos[c], f.one());
      Poly img = mono.compose(subs);
      Vec col = poly_to_vec(img);
      for (std::size_t r = 0; r < M; ++r) rho[r][c] = col[r];
    }
    return rho;
  };

  std::vector<Mat> rho;
  rho.reserve(npts);
  for (std::size_t i = 0; i < npts; ++i) rho.push_back(rho_matrix(i));

  // invariant subspace L' spanned by all translates of the subgroup equations
  RowSpace lspace(f, M);
  std::vector<Vec> fvecs;
  for (const auto& p : h_polys) fvecs.push_back(poly_to_vec(p));
  for (std::size_t gi = 0; gi < npts; ++gi) {
    for (const auto& fv : fvecs) {
      Vec img(M, 0);
      for (std::size_t r = 0; r < M; ++r) {
        felt acc = 0;
        for (std::size_t c = 0; c < M; ++c) {
          if (fv[c] != 0) acc = f.add(acc, f.mul(rho[gi][r][c], fv[c]));
        }
        img[r] = acc;
      }
      lspace.insert(std::move(img));
    }
  }
  out.dim_invariant = lspace.rows.size();
  if (out.dim_invariant > caps.invariant_cap) {
    throw CapExceededError("quotient_embed_tiny: invariant subspace dimension exceeds cap");
  }
  const std::size_t L = out.dim_invariant;
  if (L == 0) throw BadInputError("quotient_embed_tiny: subgroup equations span nothing");

  // restriction of rho_{g^-1} to L' in the L' basis; inverting makes the
  // assignment multiplicative instead of anti-multiplicative
  auto rep_hom = [&](std::size_t gi) {
    const Mat& rg = rho[inv_of[gi]];
    Mat rep(L, Vec(L, 0));
    for (std::size_t c = 0; c < L; ++c) {
      Vec img(M, 0);
      for (std::size_t r = 0; r < M; ++r) {
        felt acc = 0;
        for (std::size_t k = 0; k < M; ++k) {
          if (lspace.rows[c][k] != 0) acc = f.add(acc, f.mul(rg[r][k], lspace.rows[c][k]));
        }
        img[r] = acc;
      }
      Vec coord = lspace.coords(img);  // also certifies invariance of L'
      for (std::size_t r = 0; r < L; ++r) rep[r][c] = coord[r];
    }
    return rep;
  };
  std::vector<Mat> reps;
  reps.reserve(npts);
  for (std::size_t i = 0; i < npts; ++i) reps.push_back(rep_hom(i));

  // H points and the vanishing subspace W of L'
  std::vector<std::size_t> h_points;
  for (std::size_t i = 0; i < npts; ++i) {
    bool in_h = true;
    for (const auto& p : h_polys) {
      if (p.eval(out.group_points[i]) != 0) {
        in_h = false;
        break;
      }
    }
    if (in_h) h_points.push_back(i);
  }
  out.h_point_count = h_points.size();

  // evaluate the L' basis rows at the H points; W = kernel combinations
  // basis vector b_c evaluated at point pt: sum over monomials
  auto eval_vec = [&](const Vec& v, const std::vector<felt>& pt) {
    felt acc = 0;
    for (std::size_t m = 0; m < M; ++m) {
      if (v[m] == 0) continue;
      felt term = v[m];
      for (std::size_t j = 0; j < nvars; ++j) {
        if (monos[m][j] != 0) term = f.mul(term, f.pow(pt[j], monos[m][j]));
      }
      acc = f.add(acc, term);
    }
    return acc;
  };
  // kernel of the (|H| x L) evaluation matrix: coefficient vectors c with
  // sum_c c_i * b_i vanishing on H
  Mat eval_rows(h_points.size(), Vec(L, 0));
  for (std::size_t r = 0; r < h_points.size(); ++r) {
    for (std::size_t c = 0; c < L; ++c) {
      eval_rows[r][c] = eval_vec(lspace.rows[c], out.group_points[h_points[r]]);
    }
  }
  // kernel via rref of the evaluation matrix
  RowSpace evspace(f, L);
  for (auto& row : eval_rows) evspace.insert(row);
  std::vector<char> is_pivot(L, 0);
  for (std::size_t p : evspace.pivots) is_pivot[p] = 1;
  Mat wbasis;  // rows = coefficient vectors over the L' basis
  for (std::size_t free = 0; free < L; ++free) {
    if (is_pivot[free]) continue;
    Vec w(L, 0);
    w[free] = 1;
    for (std::size_t r = 0; r < evspace.rows.size(); ++r) {
      // pivot column value forced by the free column
      w[evspace.pivots[r]] = f.neg(evspace.rows[r][free]);
    }
    wbasis.push_back(std::move(w));
  }
  out.dim_vanishing = wbasis.size();
  const std::size_t K = out.dim_vanishing;
  if (K == 0) {
    throw BadInputError("quotient_embed_tiny: no invariant function vanishes on H");
  }

  auto wedge_sets = subsets_of_size(L, K);
  out.dim_wedge = wedge_sets.size();
  if (out.dim_wedge > caps.wedge_cap) {
    throw CapExceededError("quotient_embed_tiny: wedge space dimension exceeds cap");
  }
  const std::size_t E = out.dim_wedge;

  // alpha(g) = K-th wedge power of the restricted representation
  auto wedge_of = [&](const Mat& rep) {
    Mat a(E, Vec(E, 0));
    for (std::size_t r = 0; r < E; ++r) {
      for (std::size_t c = 0; c < E; ++c) {
        a[r][c] = minor_det(f, rep, wedge_sets[r], wedge_sets[c]);
      }
    }
    return a;
  };

  // beta(g): conjugation by alpha(g) on Mat(E), a (E^2 x E^2) matrix
  auto mat_inv = [&](const Mat& a) {
    MatrixOverF m(f, E);
    for (std::size_t i = 0; i < E; ++i) {
      for (std::size_t j = 0; j < E; ++j) m.at(i, j) = a[i][j];
    }
    MatrixOverF mi = m.inverse();
    Mat outm(E, Vec(E));
    for (std::size_t i = 0; i < E; ++i) {
      for (std::size_t j = 0; j < E; ++j) outm[i][j] = mi.at(i, j);
    }
    return outm;
  };

  out.beta.reserve(npts);
  for (std::size_t gi = 0; gi < npts; ++gi) {
    Mat a = wedge_of(reps[gi]);
    Mat ainv = mat_inv(a);
    MatrixOverF b(f, E * E);
    for (std::size_t i = 0; i < E; ++i) {
      for (std::size_t k = 0; k < E; ++k) {
        if (a[i][k] == 0) continue;
        for (std::size_t l = 0; l < E; ++l) {
          for (std::size_t j = 0; j < E; ++j) {
            // (A X A^-1)_{ij} = sum_{kl} A_{ik} X_{kl} A^-1_{lj}
            b.at(i * E + j, k * E + l) = f.mul(a[i][k], ainv[l][j]);
          }
        }
      }
    }
    out.beta.push_back(std::move(b));
  }

  // kernel on points
  for (std::size_t gi = 0; gi < npts; ++gi) {
    if (out.beta[gi].is_identity()) out.kernel_point_indices.push_back(gi);
  }
  out.kernel_equals_h_points = out.kernel_point_indices == h_points;
  if (!out.kernel_equals_h_points) {
    throw Error("quotient_embed_tiny: kernel on points differs from H(F_q)");
  }

  // homomorphism check over all pairs when the table fits
  if (!mul_tab.empty()) {
    for (std::size_t i = 0; i < npts; ++i) {
      for (std::size_t j = 0; j < npts; ++j) {
        if (out.beta[i] * out.beta[j] != out.beta[mul_tab[i][j]]) {
          throw Error("quotient_embed_tiny: beta is not a homomorphism on points");
        }
      }
    }
    out.homomorphism_checked = true;
  }
  return out;
}

}  // namespace jordanlab
