#include "f4/linalg.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace f4;

namespace {

// Independent membership oracle: rank comparison with elimination that scans
// pivot columns right to left, unlike the library's left-to-right order.
std::size_t rank_right_to_left(std::vector<Vec> rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = ncols; c-- > 0 && r < rows.size();) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = r + 1; q < rows.size(); ++q) {
      if (rows[q][c] == 0) continue;
      const Rat f = rows[q][c] / rows[r][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[q][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

bool member_oracle(const Vec& v, const Subspace& S) {
  std::vector<Vec> rows = S.basis;
  const std::size_t base = rank_right_to_left(rows, S.ambient_dim);
  rows.push_back(v);
  return rank_right_to_left(rows, S.ambient_dim) == base;
}

}  // namespace

TEST_CASE("canonicalize collapses scalar multiples") {
  Vec a = zero_vec(4);
  a[0] = 1;
  Vec b = zero_vec(4);
  b[0] = 2;
  const Subspace s = canonicalize(4, {a, b});
  CHECK(s.dim() == 1);
  CHECK(s.basis[0] == a);
}

TEST_CASE("canonicalize of the empty list is the zero subspace") {
  const Subspace s = canonicalize(7, {});
  CHECK(s.dim() == 0);
  CHECK(s == Subspace::zero(7));
}

TEST_CASE("canonicalize of a coordinate block") {
  std::vector<Vec> rows;
  for (std::size_t i = 28; i < 36; ++i) rows.push_back(unit_vec(52, i));
  const Subspace s = canonicalize(52, rows);
  CHECK(s.dim() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(s.basis[i] == unit_vec(52, 28 + i));
}

TEST_CASE("canonicalize rejects mixed ambient dimensions") {
  CHECK_THROWS_AS(canonicalize(3, {zero_vec(4)}), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent on random spans") {
  testing::Gen gen;
  for (int t = 0; t < 25; ++t) {
    std::vector<Vec> rows;
    const std::size_t n = 6;
    for (int k = 0; k < 4; ++k) rows.push_back(gen.vec(n));
    const Subspace s1 = canonicalize(n, rows);
    const Subspace s2 = canonicalize(n, s1.basis);
    CHECK(s1 == s2);
  }
}

TEST_CASE("member basics") {
  const Subspace s = canonicalize(3, {unit_vec(3, 0), unit_vec(3, 1)});
  CHECK(member(zero_vec(3), s));
  CHECK(member(unit_vec(3, 0), s));
  CHECK_FALSE(member(unit_vec(3, 2), s));
  CHECK_THROWS_AS(member(zero_vec(4), s), std::invalid_argument);
}

TEST_CASE("member agrees with an independent elimination order") {
  testing::Gen gen(24680);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 8;
    std::vector<Vec> rows;
    for (int k = 0; k < 3; ++k) rows.push_back(gen.vec(n));
    const Subspace s = canonicalize(n, rows);
    // half the probes lie in the span by construction
    Vec probe;
    if (t % 2 == 0) {
      probe = zero_vec(n);
      for (const auto& row : rows) probe = vec_add(probe, vec_scale(gen.rat(), row));
    } else {
      probe = gen.vec(n);
    }
    CHECK(member(probe, s) == member_oracle(probe, s));
  }
}

TEST_CASE("intersect basics") {
  const Subspace s12 = canonicalize(3, {unit_vec(3, 0), unit_vec(3, 1)});
  const Subspace s23 = canonicalize(3, {unit_vec(3, 1), unit_vec(3, 2)});
  CHECK(intersect(s12, s12) == s12);
  const Subspace meet = intersect(s12, s23);
  CHECK(meet.dim() == 1);
  CHECK(meet.basis[0] == unit_vec(3, 1));
  CHECK(intersect(Subspace::full(3), s23) == s23);
  CHECK_THROWS_AS(intersect(s12, Subspace::full(4)), std::invalid_argument);
}

TEST_CASE("intersect dimension bound on random spans") {
  testing::Gen gen(1357);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 7;
    std::vector<Vec> ra, rb;
    for (int k = 0; k < 4; ++k) ra.push_back(gen.vec(n));
    for (int k = 0; k < 5; ++k) rb.push_back(gen.vec(n));
    const Subspace A = canonicalize(n, ra);
    const Subspace B = canonicalize(n, rb);
    const Subspace M = intersect(A, B);
    CHECK(M.dim() + n >= A.dim() + B.dim());
    for (const auto& row : M.basis) {
      CHECK(member(row, A));
      CHECK(member(row, B));
    }
  }
}

TEST_CASE("kernel basics") {
  CHECK(kernel(MatQ(4, 4)) == Subspace::full(4));
  CHECK(kernel(MatQ::identity(5)).dim() == 0);
  MatQ m(2, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;
  const Subspace k = kernel(m);
  CHECK(k.dim() == 1);
  CHECK(k.basis[0] == unit_vec(3, 2));
}

TEST_CASE("rank-nullity holds exactly on random matrices") {
  testing::Gen gen(8642);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 1 + static_cast<std::size_t>(gen.index(6));
    const std::size_t cols = 1 + static_cast<std::size_t>(gen.index(6));
    const MatQ m = gen.mat(rows, cols);
    CHECK(rank(m) + kernel(m).dim() == cols);
    for (const auto& v : kernel(m).basis) CHECK(is_zero_vec(m.apply(v)));
  }
}

TEST_CASE("orthocomplement basics") {
  const MatQ dot3 = MatQ::identity(3);
  CHECK(orthocomplement(Subspace::zero(3), dot3) == Subspace::full(3));
  CHECK(orthocomplement(Subspace::full(3), dot3).dim() == 0);
  const Subspace e1 = canonicalize(3, {unit_vec(3, 0)});
  const Subspace comp = orthocomplement(e1, dot3);
  CHECK(comp == canonicalize(3, {unit_vec(3, 1), unit_vec(3, 2)}));
}

TEST_CASE("orthocomplement rejects degenerate forms") {
  MatQ g(2, 2);
  g(0, 0) = 1;  // rank 1
  CHECK_THROWS_AS(orthocomplement(canonicalize(2, {unit_vec(2, 0)}), g), std::invalid_argument);
  MatQ asym = MatQ::identity(2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(orthocomplement(canonicalize(2, {unit_vec(2, 0)}), asym),
                  std::invalid_argument);
}

TEST_CASE("orthocomplement dimension is complementary for nondegenerate forms") {
  testing::Gen gen(555);
  const std::size_t n = 6;
  // indefinite but nondegenerate diagonal form
  MatQ g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = (i % 2 == 0) ? 2 : -3;
  for (int t = 0; t < 15; ++t) {
    std::vector<Vec> rows;
    for (int k = 0; k < 3; ++k) rows.push_back(gen.vec(n));
    const Subspace s = canonicalize(n, rows);
    CHECK(orthocomplement(s, g).dim() == n - s.dim());
  }
}

TEST_CASE("insert_into_span keeps the canonical form") {
  testing::Gen gen(77);
  const std::size_t n = 9;
  std::vector<Vec> all;
  Subspace incremental = Subspace::zero(n);
  for (int k = 0; k < 6; ++k) {
    Vec v = gen.vec(n);
    all.push_back(v);
    insert_into_span(incremental, v);
    CHECK(incremental == canonicalize(n, all));
  }
}
