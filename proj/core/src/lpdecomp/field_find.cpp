#include "jordanlab/lpdecomp/field_find.hpp"

#include <algorithm>

namespace jordanlab {

namespace {

std::vector<felt> mat_apply(const MatrixOverF& m, const std::vector<felt>& v) {
  const Field& f = m.field();
  std::vector<felt> out(m.side(), 0);
  for (std::size_t i = 0; i < m.side(); ++i) {
    felt acc = 0;
    for (std::size_t j = 0; j < m.side(); ++j) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

bool is_zero(const std::vector<felt>& v) {
  for (felt x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

FieldFindResult find_field_typeA(const MatrixGroup& gamma, const GroupRealization& real) {
  if (real.family == RealizationFamily::PGL_ADJOINT) {
    throw UnsupportedTypeError("find_field_typeA: use the natural GL_n/SL_n coordinates");
  }
  const Field& f = gamma.field();
  const std::size_t n = gamma.matrix_side();

  // locate a regular unipotent: a single Jordan block
  std::size_t ru = SIZE_MAX;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const MatrixOverF& g = gamma.element(i);
    if (g.is_identity()) continue;
    MatrixOverF diff = g - MatrixOverF::identity(f, n);
    MatrixOverF nil = diff;
    for (std::size_t k = 1; k < n; ++k) nil = nil * diff;
    bool unip = true;
    for (std::size_t r = 0; r < n && unip; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (nil.at(r, c) != 0) {
          unip = false;
          break;
        }
      }
    }
    if (unip && diff.rank() == n - 1) {
      ru = i;
      break;
    }
  }
  if (ru == SIZE_MAX) throw NoRegularUnipotentError("find_field_typeA: no regular unipotent in Gamma");

  // Jordan basis through the kernel flag of (u - I): the first vector v (in
  // lexicographic order) with (u-I)^(n-1) v != 0, then columns N^(n-1)v,...,v
  const MatrixOverF& u = gamma.element(ru);
  MatrixOverF nmat = u - MatrixOverF::identity(f, n);
  MatrixOverF npow = MatrixOverF::identity(f, n);
  for (std::size_t k = 0; k + 1 < n; ++k) npow = npow * nmat;
  std::vector<felt> seed;
  {
    std::vector<felt> v(n, 0);
    for (;;) {
      // advance v lexicographically
      std::size_t i = n;
      bool done = true;
      while (i > 0) {
        --i;
        if (++v[i] < f.size()) {
          done = false;
          break;
        }
        v[i] = 0;
      }
      if (done) throw Error("find_field_typeA: no cyclic vector (element not regular?)");
      if (!is_zero(mat_apply(npow, v))) {
        seed = v;
        break;
      }
    }
  }
  MatrixOverF base(f, n);
  std::vector<felt> col = seed;
  std::vector<std::vector<felt>> cols(n);
  cols[n - 1] = seed;
  for (std::size_t k = n - 1; k > 0; --k) cols[k - 1] = mat_apply(nmat, cols[k]);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) base.at(i, j) = cols[j][i];
  }
  MatrixOverF base_inv = base.inverse();

  // highest-root subgroup after the base change: identity except the (1, n)
  // corner; collect the corner values over Gamma
  std::vector<felt> corners;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    MatrixOverF m = base_inv * gamma.element(i) * base;
    bool in_v = true;
    for (std::size_t r = 0; r < n && in_v; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        felt expect = (r == c) ? f.one() : 0;
        if (r == 0 && c == n - 1) continue;
        if (m.at(r, c) != expect) {
          in_v = false;
          break;
        }
      }
    }
    if (in_v) corners.push_back(m.at(0, n - 1));
  }
  std::sort(corners.begin(), corners.end());

  // closure under addition (the subgroup law of the root group)
  for (felt a : corners) {
    for (felt b : corners) {
      if (!std::binary_search(corners.begin(), corners.end(), f.add(a, b))) {
        throw NotAFieldError("find_field_typeA: corner values not closed under addition");
      }
    }
  }
  std::uint64_t q = corners.size();
  std::uint64_t t = q;
  while (t % f.characteristic() == 0) t /= f.characteristic();
  if (t != 1 || q < 2) {
    throw NotAFieldError("find_field_typeA: |Gamma ∩ V| = " + std::to_string(q) +
                         " is not a power of p");
  }

  FieldFindResult out;
  out.q = q;
  out.regular_unipotent = ru;
  out.base_change = base;
  out.corner_values = std::move(corners);
  out.witness_count = q;
  return out;
}

}  // namespace jordanlab
