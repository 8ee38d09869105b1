#pragma once

#include "f4/rat.hpp"

#include <cstddef>
#include <vector>

namespace f4 {

using Vec = std::vector<Rat>;

Vec zero_vec(std::size_t n);
std::string vec_to_string(const Vec& v);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
Rat dot(const Vec& a, const Vec& b);

// Dense matrix over Rat, row major. All matrices in this library are small
// (at most 52x52), so the arithmetic is deliberately naive.
class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols);
  static MatQ identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  MatQ transpose() const;
  Rat trace() const;
  bool is_zero() const;
  bool is_skew() const;
  bool is_symmetric() const;

  // Matrix-vector product, v.size() must equal cols().
  Vec apply(const Vec& v) const;

  bool operator==(const MatQ& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

MatQ operator+(const MatQ& a, const MatQ& b);
MatQ operator-(const MatQ& a, const MatQ& b);
MatQ operator-(const MatQ& a);
MatQ operator*(const MatQ& a, const MatQ& b);
MatQ operator*(const Rat& c, const MatQ& a);
MatQ commutator(const MatQ& a, const MatQ& b);

// A linear subspace of a fixed ambient coordinate space, stored as a reduced
// row echelon basis: rows nonzero, pivots equal to 1, pivot columns strictly
// increasing, pivot columns eliminated from all other rows. Two subspaces are
// equal iff their representations are identical.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  bool operator==(const Subspace& other) const = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
};

// Span of the given vectors in canonical reduced echelon form. Idempotent.
// Throws std::invalid_argument if a vector's length differs from ambient_dim.
Subspace canonicalize(std::size_t ambient_dim, const std::vector<Vec>& vectors);

// Exact membership test, v in span(S).
bool member(const Vec& v, const Subspace& S);

// Residual of v after eliminating the pivots of S; zero iff member(v, S).
Vec reduce_against(const Subspace& S, Vec v);

// Inserts v into S keeping the canonical form; returns true if dim grew.
bool insert_into_span(Subspace& S, Vec v);

Subspace intersect(const Subspace& S, const Subspace& T);
Subspace sum(const Subspace& S, const Subspace& T);

// Canonical basis of { v : M v = 0 }.
Subspace kernel(const MatQ& M);

std::size_t rank(const MatQ& M);

// { v : form(v, s) = 0 for all s in S }. The form must be symmetric and
// non-degenerate; a degenerate form throws std::invalid_argument.
Subspace orthocomplement(const Subspace& S, const MatQ& form);

}  // namespace f4
