#include <algorithm>
#include <cmath>

#include "jordanlab/varlab/variety.hpp"

namespace jordanlab {

namespace {

// Upper-left n x n corner of the embedded tuple, as a matrix.
void scan_brute(const VarietySpec& v, std::uint64_t budget, PointSet& out) {
  const Field& f = v.field;
  const std::uint64_t q = f.size();
  // overflow-safe q^ambient_vars <= budget check
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < v.ambient_vars; ++i) {
    if (total > budget / q) throw BudgetExceededError("points_over: brute-force scan exceeds budget");
    total *= q;
  }
  std::vector<felt> point(v.ambient_vars, 0);
  for (;;) {
    if (v.contains(point)) out.points.push_back(point);
    // increment the tuple as a base-q counter, last coordinate fastest so the
    // output comes out lexicographically sorted
    std::size_t i = v.ambient_vars;
    while (i > 0) {
      --i;
      if (++point[i] < q) break;
      point[i] = 0;
      if (i == 0) return;
    }
    if (v.ambient_vars == 0) return;
  }
}

void scan_gln(const VarietySpec& v, std::uint64_t budget, PointSet& out) {
  const Field& f = v.field;
  const std::size_t n = v.matrix_n;
  const std::uint64_t q = f.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (total > budget / q) throw BudgetExceededError("points_over: GL_n scan exceeds budget");
    total *= q;
  }
  MatrixOverF m(f, n);
  std::vector<felt> entries(n * n, 0);
  for (;;) {
    for (std::size_t i = 0; i < n * n; ++i) m.at(i / n, i % n) = entries[i];
    if (m.det() != 0) {
      std::vector<felt> coords = embed_coords(m);
      if (v.contains(coords)) out.points.push_back(std::move(coords));
    }
    std::size_t i = n * n;
    bool done = false;
    while (i > 0) {
      --i;
      if (++entries[i] < q) break;
      entries[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  std::sort(out.points.begin(), out.points.end());
}

void scan_torus(const VarietySpec& v, PointSet& out) {
  const Field& f = v.field;
  const std::size_t n = v.matrix_n;
  const std::uint64_t q = f.size();
  std::vector<felt> diag(n, 1);  // each entry ranges over the nonzero values 1..q-1
  for (;;) {
    MatrixOverF m(f, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = diag[i];
    std::vector<felt> coords = embed_coords(m);
    if (v.contains(coords)) out.points.push_back(std::move(coords));
    std::size_t i = n;
    bool done = false;
    while (i > 0) {
      --i;
      if (++diag[i] < q) break;
      diag[i] = 1;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  std::sort(out.points.begin(), out.points.end());
}

void scan_unitriangular(const VarietySpec& v, PointSet& out) {
  const Field& f = v.field;
  const std::size_t n = v.matrix_n;
  const std::size_t frees = n * (n - 1) / 2;
  const std::uint64_t q = f.size();
  std::vector<felt> vals(frees, 0);
  for (;;) {
    MatrixOverF m = MatrixOverF::identity(f, n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m.at(i, j) = vals[k++];
    }
    std::vector<felt> coords = embed_coords(m);
    if (v.contains(coords)) out.points.push_back(std::move(coords));
    if (frees == 0) break;
    std::size_t i = frees;
    bool done = false;
    while (i > 0) {
      --i;
      if (++vals[i] < q) break;
      vals[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  std::sort(out.points.begin(), out.points.end());
}

}  // namespace

PointSet points_over(const VarietySpec& V, std::uint32_t k, std::uint64_t budget) {
  VarietySpec v = V.over_extension(k);
  PointSet out;
  out.field = v.field;
  out.ambient_vars = v.ambient_vars;
  switch (v.enumerator) {
    case Enumerator::BRUTE:
      scan_brute(v, budget, out);
      break;
    case Enumerator::GLN:
      scan_gln(v, budget, out);
      break;
    case Enumerator::TORUS:
      scan_torus(v, out);
      break;
    case Enumerator::UNITRIANGULAR:
      scan_unitriangular(v, out);
      break;
  }
  return out;
}

DimensionEstimate empirical_dimension(const VarietySpec& V, const std::vector<std::uint32_t>& k_range,
                                      std::uint64_t budget) {
  if (k_range.empty()) throw BadInputError("empirical_dimension: empty k range");
  DimensionEstimate est;
  const double logq = std::log(static_cast<double>(V.field.size()));
  std::vector<double> xs, ys;
  for (std::uint32_t k : k_range) {
    PointSet ps = points_over(V, k, budget);
    if (ps.points.empty()) throw NoPointsError("empirical_dimension: no points over extension " + std::to_string(k));
    est.counts.emplace_back(k, ps.points.size());
    xs.push_back(static_cast<double>(k));
    ys.push_back(std::log(static_cast<double>(ps.points.size())) / logq);
  }
  const std::size_t m = xs.size();
  double intercept = 0;
  if (m == 1) {
    est.slope = ys[0] / xs[0];
  } else {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    est.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    intercept = (sy - est.slope * sx) / m;
  }
  est.rounded = std::lround(est.slope);
  double worst = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double fit = intercept + est.slope * xs[i];
    worst = std::max(worst, std::abs(ys[i] - fit));
  }
  est.residual = worst;
  est.confident = worst < 0.1;
  return est;
}

}  // namespace jordanlab
