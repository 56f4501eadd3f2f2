#include "jordanlab/ffarith/matrix.hpp"

#include <sstream>

namespace jordanlab {

MatrixOverF MatrixOverF::identity(Field f, std::size_t n) {
  MatrixOverF m(f, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixOverF MatrixOverF::operator*(const MatrixOverF& o) const {
  MatrixOverF out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      felt aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        felt x = o.at(k, j);
        if (x == 0) continue;
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(aik, x));
      }
    }
  }
  return out;
}

MatrixOverF MatrixOverF::operator+(const MatrixOverF& o) const {
  MatrixOverF out(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.add(a_[i], o.a_[i]);
  return out;
}

MatrixOverF MatrixOverF::operator-(const MatrixOverF& o) const {
  MatrixOverF out(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.sub(a_[i], o.a_[i]);
  return out;
}

felt MatrixOverF::det() const {
  MatrixOverF m = *this;
  felt d = 1;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = field_.neg(d);
    }
    d = field_.mul(d, m.at(col, col));
    felt inv = field_.inv(m.at(col, col));
    for (std::size_t r = col + 1; r < n_; ++r) {
      felt factor = field_.mul(m.at(r, col), inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n_; ++j) {
        m.at(r, j) = field_.sub(m.at(r, j), field_.mul(factor, m.at(col, j)));
      }
    }
  }
  return d;
}

std::size_t MatrixOverF::rank() const {
  MatrixOverF m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
    std::size_t pivot = rank;
    while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n_) continue;
    for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    felt inv = field_.inv(m.at(rank, col));
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      felt factor = field_.mul(m.at(r, col), inv);
      for (std::size_t j = 0; j < n_; ++j) {
        m.at(r, j) = field_.sub(m.at(r, j), field_.mul(factor, m.at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

bool MatrixOverF::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

MatrixOverF MatrixOverF::inverse() const {
  MatrixOverF m = *this;
  MatrixOverF inv = identity(field_, n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n_) throw NotInvertibleError("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    felt pi = field_.inv(m.at(col, col));
    for (std::size_t j = 0; j < n_; ++j) {
      m.at(col, j) = field_.mul(m.at(col, j), pi);
      inv.at(col, j) = field_.mul(inv.at(col, j), pi);
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      felt factor = m.at(r, col);
      for (std::size_t j = 0; j < n_; ++j) {
        m.at(r, j) = field_.sub(m.at(r, j), field_.mul(factor, m.at(col, j)));
        inv.at(r, j) = field_.sub(inv.at(r, j), field_.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

MatrixOverF MatrixOverF::pow(std::uint64_t k) const {
  MatrixOverF r = identity(field_, n_);
  MatrixOverF base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

MatrixOverF MatrixOverF::frobenius(std::uint64_t q) const {
  MatrixOverF out(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.frobenius(a_[i], q);
  return out;
}

Poly MatrixOverF::charpoly() const {
  // Berkowitz: division-free, builds the characteristic polynomial of the
  // leading principal minors via Toeplitz products.
  const std::size_t n = n_;
  Field f = field_;
  std::vector<felt> c{1};  // charpoly of the 0x0 matrix
  for (std::size_t k = 1; k <= n; ++k) {
    // principal k x k block: M = a_[0..k)x[0..k); split as
    // [ R  S ]   with A the (k-1)x(k-1) block, row vector R', col vector S,
    // [ R' a ]   scalar a = at(k-1,k-1).
    std::vector<felt> col(k + 1, 0);  // Toeplitz column: 1, -a, -R'S, -R'AS, ...
    col[0] = 1;
    col[1] = f.neg(at(k - 1, k - 1));
    if (k >= 2) {
      std::vector<felt> v(k - 1);  // v = S
      for (std::size_t i = 0; i < k - 1; ++i) v[i] = at(i, k - 1);
      for (std::size_t t = 2; t <= k; ++t) {
        // col[t] = -R' * v, then v = A * v
        felt dot = 0;
        for (std::size_t i = 0; i < k - 1; ++i) dot = f.add(dot, f.mul(at(k - 1, i), v[i]));
        col[t] = f.neg(dot);
        if (t == k) break;
        std::vector<felt> nv(k - 1, 0);
        for (std::size_t i = 0; i < k - 1; ++i) {
          felt acc = 0;
          for (std::size_t j = 0; j < k - 1; ++j) acc = f.add(acc, f.mul(at(i, j), v[j]));
          nv[i] = acc;
        }
        v = std::move(nv);
      }
    }
    // multiply the Toeplitz operator by the previous coefficient vector:
    // new_c[i] = sum_j col[i-j] * c[j]
    std::vector<felt> nc(k + 1, 0);
    for (std::size_t i = 0; i <= k; ++i) {
      felt acc = 0;
      for (std::size_t j = 0; j < c.size() && j <= i; ++j) {
        if (i - j <= k) acc = f.add(acc, f.mul(col[i - j], c[j]));
      }
      nc[i] = acc;
    }
    c = std::move(nc);
  }
  // c[i] is the coefficient of t^(n-i)
  Poly out(f, 1);
  for (std::size_t i = 0; i <= n; ++i) out.add_term({static_cast<std::uint32_t>(n - i)}, c[i]);
  return out;
}

MatrixOverF MatrixOverF::eval_poly(const Poly& p) const {
  MatrixOverF acc(field_, n_);
  for (const auto& [m, coeff] : p.terms()) {
    MatrixOverF term = pow(m[0]);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        term.at(i, j) = field_.mul(term.at(i, j), coeff);
      }
    }
    acc = acc + term;
  }
  return acc;
}

std::string MatrixOverF::canonical_bytes() const {
  std::string out;
  out.reserve(a_.size() * 4);
  for (felt v : a_) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
  }
  return out;
}

MatrixOverF MatrixOverF::map_entries(const FieldEmbedding& emb) const {
  MatrixOverF out(emb.dst(), n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.at(i, j) = emb(at(i, j));
  }
  return out;
}

std::string MatrixOverF::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ",";
      os << at(i, j);
    }
  }
  os << "]";
  return os.str();
}

}  // namespace jordanlab
