#include "f4/rootspaces.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace f4;

namespace {
Octonion e(int i) { return Octonion::basis(i); }
const Octonion kZero;
const F4Elt kH = F4Elt::from_parts(MatQ(8, 8), kZero, Octonion::unit(), kZero);
}  // namespace

TEST_CASE("distinguished subspace dimensions") {
  CHECK(k_space().dim() == 36);
  CHECK(p_star_space().dim() == 16);
  CHECK(a_space().dim() == 1);
  CHECK(v_space().dim() == 8);
  CHECK(z_space().dim() == 7);
  CHECK(k0_space().dim() == 21);
  CHECK(n_space().dim() == 15);
  CHECK(an_space().dim() == 16);
  CHECK(parabolic_space().dim() == 37);
}

TEST_CASE("root space decomposition dims and eigenrelations") {
  const RootSpaceDecomp d = root_decomposition();
  CHECK(d.g_m2a.dim() == 7);
  CHECK(d.g_ma.dim() == 8);
  CHECK(d.g_0.dim() == 22);
  CHECK(d.g_a.dim() == 8);
  CHECK(d.g_2a.dim() == 7);

  testing::Gen gen(2121);
  const Octonion x = gen.octonion();
  // [H,(0,-conj x,0,x)] = (0,-conj x,0,x) and [H,(0,conj x,0,x)] = -(...)
  const F4Elt plus = F4Elt::from_parts(MatQ(8, 8), -conj(x), kZero, x);
  CHECK(bracket_nc(kH, plus) == plus);
  const F4Elt minus = F4Elt::from_parts(MatQ(8, 8), conj(x), kZero, x);
  CHECK(bracket_nc(kH, minus) == -minus);
  // [H,(R_p,0,p,0)] = 2(R_p,0,p,0)
  const Octonion p = pure_part(gen.octonion());
  const F4Elt two = F4Elt::from_parts(rmat(p), kZero, p, kZero);
  CHECK(bracket_nc(kH, two) == Rat(2) * two);
  // R_p = 2 lambda^2(e ^ p)
  CHECK(rmat(p) == Rat(2) * lambda2(wedge(Octonion::unit(), p)));
  // [(0,0,e,0),(lambda^2(X),0,0,0)] = 0 for X in so(7)
  for (int i = 1; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      const F4Elt k0elt =
          F4Elt::from_parts(lambda2(wedge(e(i), e(j))), kZero, kZero, kZero);
      CHECK(bracket_nc(kH, k0elt).is_zero());
    }
  }
}

TEST_CASE("iota maps the coordinates onto the parabolic") {
  // (0,1,0,0) -> (0,0,e,0)
  CHECK(iota(IwasawaCoords::make(MatQ(8, 8), 1, kZero, kZero)) == kH);
  // (0,0,x,0) -> (0,-conj x,0,x)
  testing::Gen gen(2222);
  const Octonion x = gen.octonion();
  CHECK(iota(IwasawaCoords::make(MatQ(8, 8), 0, x, kZero)) ==
        F4Elt::from_parts(MatQ(8, 8), -conj(x), kZero, x));
  // (0,0,0,p) -> (R_p,0,p,0)
  const Octonion p = pure_part(gen.octonion());
  CHECK(iota(IwasawaCoords::make(MatQ(8, 8), 0, kZero, p)) ==
        F4Elt::from_parts(rmat(p), kZero, p, kZero));
}

TEST_CASE("IwasawaCoords validates its invariants") {
  CHECK_THROWS_AS(IwasawaCoords::make(MatQ(8, 8), 0, kZero, Octonion::unit()),
                  std::invalid_argument);
  CHECK_THROWS_AS(IwasawaCoords::make(wedge(e(1), e(0)), 0, kZero, kZero),
                  std::invalid_argument);
  CHECK_THROWS_AS(IwasawaCoords::make(MatQ::identity(8), 0, kZero, kZero),
                  std::invalid_argument);
}

TEST_CASE("an_bracket explicit values") {
  // [(0,1,0,0),(0,0,x,0)] = (0,0,x,0)
  testing::Gen gen(2323);
  const Octonion x = gen.octonion();
  const auto c1 = IwasawaCoords::make(MatQ(8, 8), 1, kZero, kZero);
  const auto c2 = IwasawaCoords::make(MatQ(8, 8), 0, x, kZero);
  CHECK(iota(an_bracket(c1, c2)) == iota(IwasawaCoords::make(MatQ(8, 8), 0, x, kZero)));
  // [(0,1,0,0),(0,0,0,q)] = (0,0,0,2q)
  const Octonion q = pure_part(gen.octonion());
  const auto c3 = IwasawaCoords::make(MatQ(8, 8), 0, kZero, q);
  CHECK(iota(an_bracket(c1, c3)) ==
        iota(IwasawaCoords::make(MatQ(8, 8), 0, kZero, Rat(2) * q)));
  // [(0,0,x,0),(0,0,y,0)] = (0,0,0, x conj(y) - y conj(x))
  const Octonion y = gen.octonion();
  const auto c4 = IwasawaCoords::make(MatQ(8, 8), 0, y, kZero);
  CHECK(iota(an_bracket(c2, c4)) ==
        iota(IwasawaCoords::make(MatQ(8, 8), 0, kZero,
                                 mul(x, conj(y)) - mul(y, conj(x)))));
}

TEST_CASE("an_bracket agrees with the ambient bracket through iota") {
  testing::Gen gen(2424);
  auto random_coords = [&] {
    MatQ A(8, 8);
    for (std::size_t i = 1; i < 8; ++i) {
      for (std::size_t j = i + 1; j < 8; ++j) {
        A(i, j) = gen.rat();
        A(j, i) = -A(i, j);
      }
    }
    return IwasawaCoords::make(std::move(A), gen.rat(), gen.octonion(),
                               pure_part(gen.octonion()));
  };
  for (int t = 0; t < 10; ++t) {
    const auto c1 = random_coords();
    const auto c2 = random_coords();
    CHECK(iota(an_bracket(c1, c2)) == bracket_nc(iota(c1), iota(c2)));
  }
}

TEST_CASE("series dimensions") {
  const auto lcs = lower_central_series(n_space());
  REQUIRE(lcs.size() == 3);
  CHECK(lcs[0].dim() == 15);
  CHECK(lcs[1].dim() == 7);
  CHECK(lcs[2].dim() == 0);
  CHECK(lcs[1] == z_space());

  const auto ds = derived_series(an_space());
  CHECK(ds.back().dim() == 0);

  // a single 2-alpha line is abelian
  const Subspace line = canonicalize(kF4Dim, {z_space().basis[0]});
  const auto single = lower_central_series(line);
  REQUIRE(single.size() == 2);
  CHECK(single[0].dim() == 1);
  CHECK(single[1].dim() == 0);
}

TEST_CASE("series reject non-subalgebras with a witness") {
  const Subspace bad = sum(v_space(), canonicalize(kF4Dim, {to_vec52(F4Elt::from_parts(
                                          MatQ(8, 8), conj(e(1)), kZero, e(1)))}));
  CHECK_THROWS_WITH_AS(lower_central_series(bad),
                       doctest::Contains("not a subalgebra"), std::invalid_argument);
}
