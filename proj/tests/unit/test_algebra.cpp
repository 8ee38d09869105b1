#include "f4/algebra.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace f4;

namespace {
Octonion e(int i) { return Octonion::basis(i); }
const Octonion kZero;

F4Elt elt(MatQ A, Octonion x, Octonion y, Octonion z) {
  return F4Elt::from_parts(std::move(A), x, y, z);
}
}  // namespace

TEST_CASE("bracket on the so(8) and first octonion slots") {
  testing::Gen gen;
  const MatQ A = gen.skew8();
  const MatQ B = gen.skew8();
  const F4Elt ab = bracket_c(elt(A, kZero, kZero, kZero), elt(B, kZero, kZero, kZero));
  CHECK(ab == elt(commutator(A, B), kZero, kZero, kZero));

  const Octonion x = gen.octonion();
  const Octonion y = gen.octonion();
  const F4Elt xy = bracket_c(elt(MatQ(8, 8), x, kZero, kZero), elt(MatQ(8, 8), y, kZero, kZero));
  CHECK(xy == elt(Rat(-4) * wedge(x, y), kZero, kZero, kZero));
}

TEST_CASE("bracket between the two p-slots produces the conjugated product") {
  // [(0,0,e,0),(0,0,0,e)] = (0,e,0,0) compact, (0,-e,0,0) non-compact
  const F4Elt X = elt(MatQ(8, 8), kZero, e(0), kZero);
  const F4Elt Y = elt(MatQ(8, 8), kZero, kZero, e(0));
  CHECK(bracket_c(X, Y) == elt(MatQ(8, 8), e(0), kZero, kZero));
  CHECK(bracket_nc(X, Y) == elt(MatQ(8, 8), -e(0), kZero, kZero));
}

TEST_CASE("the k x k and k x p parts of the two brackets agree, p x p flips sign") {
  for (int i = 0; i < kF4Dim; ++i) {
    for (int j = i + 1; j < kF4Dim; ++j) {
      const F4Elt bc = bracket_c(F4Elt::basis(i), F4Elt::basis(j));
      const F4Elt bn = bracket_nc(F4Elt::basis(i), F4Elt::basis(j));
      const bool both_p = i >= kWedgeDim + 8 && j >= kWedgeDim + 8;
      if (both_p)
        CHECK(bn == -bc);
      else
        CHECK(bn == bc);
    }
  }
}

TEST_CASE("brackets are bilinear and skew") {
  testing::Gen gen(111);
  for (int t = 0; t < 5; ++t) {
    const F4Elt p = gen.elt(), q = gen.elt(), r = gen.elt();
    const Rat c = gen.rat();
    for (const Algebra alg : {Algebra::compact, Algebra::noncompact}) {
      CHECK(bracket(alg, p, q) == -bracket(alg, q, p));
      CHECK(bracket(alg, p + r, q) == bracket(alg, p, q) + bracket(alg, r, q));
      CHECK(bracket(alg, c * p, q) == c * bracket(alg, p, q));
    }
  }
}

TEST_CASE("tau is an order-3 bracket automorphism fixing the scalar product") {
  testing::Gen gen(222);
  const F4Elt p = gen.elt();
  const F4Elt q = gen.elt();
  CHECK(tau(tau(tau(p))) == p);
  CHECK(tau(bracket_c(p, q)) == bracket_c(tau(p), tau(q)));
  CHECK(inner(tau(p), tau(q)) == inner(p, q));

  const MatQ A = gen.skew8();
  CHECK(tau(elt(A, kZero, kZero, kZero)) == elt(lambda(A), kZero, kZero, kZero));
  const Octonion x = gen.octonion();
  CHECK(tau(elt(MatQ(8, 8), x, kZero, kZero)) == elt(MatQ(8, 8), kZero, kZero, x));
}

TEST_CASE("scalar product values") {
  const F4Elt v = elt(MatQ(8, 8), kZero, e(0), kZero);
  CHECK(inner(v, v) == 8);
  const F4Elt w = elt(wedge(e(1), e(0)), kZero, kZero, kZero);
  CHECK(inner(w, w) == 2);
  CHECK(inner(w, v) == 0);
  testing::Gen gen(333);
  for (int t = 0; t < 5; ++t) {
    const F4Elt p = gen.elt(), q = gen.elt();
    CHECK(inner(p, q) == inner(q, p));
    CHECK(inner(p, p) > 0);
    CHECK(inner(p, q) == inner_vec(to_vec52(p), to_vec52(q)));
  }
}

TEST_CASE("scalar product is ad-invariant") {
  testing::Gen gen(444);
  for (int t = 0; t < 5; ++t) {
    const F4Elt p = gen.elt(), q = gen.elt(), r = gen.elt();
    CHECK(inner(bracket_c(p, r), q) + inner(p, bracket_c(q, r)) == 0);
  }
}

TEST_CASE("so8_derivation agrees with bracketing by (X,0,0,0)") {
  testing::Gen gen(555);
  const MatQ X = gen.skew8();
  const F4Elt p = gen.elt();
  CHECK(so8_derivation(X, p) == bracket_c(elt(X, kZero, kZero, kZero), p));
  CHECK(so8_derivation(X, p) == bracket_nc(elt(X, kZero, kZero, kZero), p));
  for (int k = 0; k < kWedgeDim; ++k) {
    const MatQ W = basis_wedge(k);
    for (int j = 0; j < kF4Dim; ++j) {
      CHECK(so8_derivation(W, F4Elt::basis(j)) ==
            bracket_c(elt(W, kZero, kZero, kZero), F4Elt::basis(j)));
    }
  }
  // derivation property
  const F4Elt q = gen.elt();
  CHECK(so8_derivation(X, bracket_c(p, q)) ==
        bracket_c(so8_derivation(X, p), q) + bracket_c(p, so8_derivation(X, q)));
}

TEST_CASE("jacobi defect vanishes") {
  testing::Gen gen(666);
  const F4Elt p = gen.elt(), q = gen.elt();
  CHECK(jacobi_defect(Algebra::compact, p, p, q).is_zero());
  // the mixed slot case of the compact proof
  const F4Elt xi = elt(gen.skew8(), kZero, kZero, kZero);
  const F4Elt eta = elt(MatQ(8, 8), gen.octonion(), kZero, kZero);
  const F4Elt zeta = elt(MatQ(8, 8), kZero, gen.octonion(), kZero);
  CHECK(jacobi_defect(Algebra::compact, xi, eta, zeta).is_zero());
  for (int t = 0; t < 10; ++t) {
    const F4Elt a = gen.elt(), b = gen.elt(), c = gen.elt();
    CHECK(jacobi_defect(Algebra::compact, a, b, c).is_zero());
    CHECK(jacobi_defect(Algebra::noncompact, a, b, c).is_zero());
  }
}

TEST_CASE("cartan involution") {
  testing::Gen gen(777);
  const F4Elt k_part = elt(gen.skew8(), gen.octonion(), kZero, kZero);
  CHECK(cartan_involution(k_part) == k_part);
  const F4Elt p_part = elt(MatQ(8, 8), kZero, gen.octonion(), gen.octonion());
  CHECK(cartan_involution(p_part) == -p_part);
  for (int t = 0; t < 10; ++t) {
    const F4Elt p = gen.elt(), q = gen.elt();
    CHECK(cartan_involution(cartan_involution(p)) == p);
    CHECK(cartan_involution(bracket_nc(p, q)) ==
          bracket_nc(cartan_involution(p), cartan_involution(q)));
  }
}

TEST_CASE("k is a subalgebra matching the so(9) model") {
  // k = so(8) x O x 0 x 0; [(A,u,0,0),(B,x,0,0)] = ([A,B] - 4 u^x, Ax - Bu, 0, 0)
  for (int i = 0; i < kWedgeDim + 8; ++i) {
    for (int j = i + 1; j < kWedgeDim + 8; ++j) {
      const F4Elt a = F4Elt::basis(i);
      const F4Elt b = F4Elt::basis(j);
      const F4Elt br = bracket_c(a, b);
      CHECK(br.y.is_zero());
      CHECK(br.z.is_zero());
      const So9Elt s = so9_bracket(So9Elt{a.A, a.x}, So9Elt{b.A, b.x});
      CHECK(br.A == s.A);
      CHECK(br.x == s.x);
    }
  }
}

TEST_CASE("symmetric pair relations of k and p") {
  for (const Algebra alg : {Algebra::compact, Algebra::noncompact}) {
    for (int i = 0; i < kF4Dim; ++i) {
      for (int j = kWedgeDim + 8; j < kF4Dim; ++j) {
        const F4Elt br = bracket(alg, F4Elt::basis(i), F4Elt::basis(j));
        if (i < kWedgeDim + 8) {
          // [k, p] lies in p
          CHECK(br.A.is_zero());
          CHECK(br.x.is_zero());
        } else {
          // [p, p] lies in k
          CHECK(br.y.is_zero());
          CHECK(br.z.is_zero());
        }
      }
    }
  }
}

TEST_CASE("coordinates round trip") {
  testing::Gen gen(888);
  const F4Elt p = gen.elt();
  CHECK(from_vec52(to_vec52(p)) == p);
  for (int i = 0; i < kF4Dim; ++i) CHECK(to_vec52(F4Elt::basis(i)) == unit_vec(kF4Dim, static_cast<std::size_t>(i)));
}
