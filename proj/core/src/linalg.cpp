#include "f4/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace f4 {

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << ", ";
    os << i << ": " << rat_to_string(v[i]);
    first = false;
  }
  if (first) os << "0";
  os << "]";
  return os.str();
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v[i] = 1;
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& c : v) {
    if (c != 0) return false;
  }
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

MatQ::MatQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rat MatQ::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  Rat s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

bool MatQ::is_zero() const {
  for (const auto& c : data_) {
    if (c != 0) return false;
  }
  return true;
}

bool MatQ::is_skew() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool MatQ::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Vec MatQ::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& a = (*this)(i, j);
      if (a != 0 && v[j] != 0) s += a * v[j];
    }
    r[i] = std::move(s);
  }
  return r;
}

MatQ operator+(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix add: shape mismatch");
  MatQ r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

MatQ operator-(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sub: shape mismatch");
  MatQ r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

MatQ operator-(const MatQ& a) {
  MatQ r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
  return r;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix mul: shape mismatch");
  MatQ r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

MatQ operator*(const Rat& c, const MatQ& a) {
  MatQ r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

MatQ commutator(const MatQ& a, const MatQ& b) { return a * b - b * a; }

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace{ambient_dim, {}}; }

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s{ambient_dim, {}};
  for (std::size_t i = 0; i < ambient_dim; ++i) s.basis.push_back(unit_vec(ambient_dim, i));
  return s;
}

namespace {

// In-place reduced row echelon form; returns the rank.
std::size_t rref(std::vector<Vec>& rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rat inv = Rat(1) / rows[r][col];
    for (std::size_t j = col; j < ncols; ++j) rows[r][j] *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][col] == 0) continue;
      const Rat f = rows[q][col];
      for (std::size_t j = col; j < ncols; ++j) rows[q][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

Subspace canonicalize(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim)
      throw std::invalid_argument("canonicalize: vector dimension mismatch");
  }
  std::vector<Vec> rows = vectors;
  const std::size_t r = rref(rows, ambient_dim);
  rows.resize(r);
  return Subspace{ambient_dim, std::move(rows)};
}

Vec reduce_against(const Subspace& S, Vec v) {
  if (v.size() != S.ambient_dim)
    throw std::invalid_argument("reduce_against: dimension mismatch");
  for (const auto& row : S.basis) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;  // rows are nonzero with pivot 1
    if (v[p] == 0) continue;
    const Rat f = v[p];
    for (std::size_t j = p; j < v.size(); ++j) v[j] -= f * row[j];
  }
  return v;
}

bool member(const Vec& v, const Subspace& S) {
  return is_zero_vec(reduce_against(S, v));
}

bool insert_into_span(Subspace& S, Vec v) {
  v = reduce_against(S, std::move(v));
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  const Rat inv = Rat(1) / v[p];
  for (std::size_t j = p; j < v.size(); ++j) v[j] *= inv;
  // eliminate the new pivot column from existing rows and keep pivot order
  for (auto& row : S.basis) {
    if (row[p] == 0) continue;
    const Rat f = row[p];
    for (std::size_t j = p; j < v.size(); ++j) row[j] -= f * v[j];
  }
  auto it = S.basis.begin();
  for (; it != S.basis.end(); ++it) {
    std::size_t q = 0;
    while ((*it)[q] == 0) ++q;
    if (q > p) break;
  }
  S.basis.insert(it, std::move(v));
  return true;
}

Subspace intersect(const Subspace& S, const Subspace& T) {
  if (S.ambient_dim != T.ambient_dim)
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const std::size_t n = S.ambient_dim;
  // Zassenhaus: rows [s|s] for s in S, [t|0] for t in T; after elimination the
  // right halves of rows with zero left half span the intersection.
  std::vector<Vec> rows;
  rows.reserve(S.dim() + T.dim());
  for (const auto& s : S.basis) {
    Vec row(2 * n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = s[j];
      row[n + j] = s[j];
    }
    rows.push_back(std::move(row));
  }
  for (const auto& t : T.basis) {
    Vec row(2 * n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = t[j];
    rows.push_back(std::move(row));
  }
  rref(rows, 2 * n);
  std::vector<Vec> inter;
  for (const auto& row : rows) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] != 0) {
        left_zero = false;
        break;
      }
    }
    if (!left_zero) continue;
    Vec right(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    if (!is_zero_vec(right)) inter.push_back(std::move(right));
  }
  return canonicalize(n, inter);
}

Subspace sum(const Subspace& S, const Subspace& T) {
  if (S.ambient_dim != T.ambient_dim)
    throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<Vec> rows = S.basis;
  rows.insert(rows.end(), T.basis.begin(), T.basis.end());
  return canonicalize(S.ambient_dim, rows);
}

Subspace kernel(const MatQ& M) {
  const std::size_t n = M.cols();
  std::vector<Vec> rows;
  rows.reserve(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Vec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = M(i, j);
    rows.push_back(std::move(row));
  }
  const std::size_t r = rref(rows, n);
  rows.resize(r);
  std::vector<std::size_t> pivot_col(r);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t p = 0;
    while (rows[i][p] == 0) ++p;
    pivot_col[i] = p;
    is_pivot[p] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return canonicalize(n, basis);
}

std::size_t rank(const MatQ& M) {
  std::vector<Vec> rows;
  rows.reserve(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Vec row(M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j) row[j] = M(i, j);
    rows.push_back(std::move(row));
  }
  return rref(rows, M.cols());
}

Subspace orthocomplement(const Subspace& S, const MatQ& form) {
  const std::size_t n = S.ambient_dim;
  if (form.rows() != n || form.cols() != n)
    throw std::invalid_argument("orthocomplement: form shape mismatch");
  if (!form.is_symmetric())
    throw std::invalid_argument("orthocomplement: form is not symmetric");
  if (rank(form) != n)
    throw std::invalid_argument("orthocomplement: form is degenerate");
  MatQ M(S.dim(), n);
  for (std::size_t i = 0; i < S.dim(); ++i) {
    const Vec gs = form.apply(S.basis[i]);  // form symmetric, so rows are s^T G
    for (std::size_t j = 0; j < n; ++j) M(i, j) = gs[j];
  }
  return kernel(M);
}

}  // namespace f4
