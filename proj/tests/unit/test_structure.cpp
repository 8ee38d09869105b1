#include "f4/structure.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace f4;

TEST_CASE("table expansion matches the direct bracket") {
  testing::Gen gen(1212);
  for (const Algebra alg : {Algebra::compact, Algebra::noncompact}) {
    const StructureTable& t = StructureTable::builtin(alg);
    for (int trial = 0; trial < 5; ++trial) {
      const F4Elt p = gen.elt();
      const F4Elt q = gen.elt();
      CHECK(t.bracket_vec(to_vec52(p), to_vec52(q)) == to_vec52(bracket(alg, p, q)));
    }
  }
}

TEST_CASE("adjoint matrices act as the bracket") {
  const StructureTable& t = StructureTable::builtin(Algebra::compact);
  testing::Gen gen(1313);
  for (int trial = 0; trial < 8; ++trial) {
    const int i = gen.index(kF4Dim);
    const Vec v = to_vec52(gen.elt());
    CHECK(t.ad(i).apply(v) == t.bracket_vec(unit_vec(kF4Dim, static_cast<std::size_t>(i)), v));
  }
}

TEST_CASE("killing pairing agrees with dense adjoint traces") {
  testing::Gen gen(1414);
  for (const Algebra alg : {Algebra::compact, Algebra::noncompact}) {
    const StructureTable& t = StructureTable::builtin(alg);
    for (int trial = 0; trial < 6; ++trial) {
      const int i = gen.index(kF4Dim);
      const int j = gen.index(kF4Dim);
      CHECK(t.killing_entry(i, j) == (t.ad(i) * t.ad(j)).trace());
    }
  }
}

TEST_CASE("killing form is invariant and proportional to the scalar product") {
  testing::Gen gen(1515);
  for (int t = 0; t < 5; ++t) {
    const F4Elt p = gen.elt(), q = gen.elt(), r = gen.elt();
    CHECK(killing(Algebra::compact, bracket_c(p, q), r) +
              killing(Algebra::compact, q, bracket_c(p, r)) ==
          0);
  }
  const StructureTable& tc = StructureTable::builtin(Algebra::compact);
  const Rat c = tc.killing_entry(0, 0) / Rat(2);
  CHECK(c < 0);
  for (int i = 0; i < kF4Dim; ++i) {
    const Rat weight = i < kWedgeDim ? 2 : 8;
    CHECK(tc.killing_entry(i, i) == c * weight);
  }
  // k x p block of the compact killing form vanishes
  for (int i = 0; i < kWedgeDim + 8; ++i)
    for (int j = kWedgeDim + 8; j < kF4Dim; ++j) CHECK(tc.killing_entry(i, j) == 0);
}

TEST_CASE("ideal closure reaches the whole algebra") {
  const Octonion zero;
  CHECK(ideal_closure(Algebra::compact,
                      F4Elt::from_parts(wedge(Octonion::basis(1), Octonion::basis(2)), zero,
                                        zero, zero))
            .dim() == kF4Dim);
  CHECK(ideal_closure(Algebra::compact,
                      F4Elt::from_parts(MatQ(8, 8), Octonion::unit(), zero, zero))
            .dim() == kF4Dim);
  CHECK(ideal_closure(Algebra::compact,
                      F4Elt::from_parts(MatQ(8, 8), zero, zero, Octonion::basis(7)))
            .dim() == kF4Dim);
  CHECK_THROWS_AS(ideal_closure(Algebra::compact, F4Elt{}), std::invalid_argument);
}

TEST_CASE("imported triples reproduce the table") {
  const StructureTable& t = StructureTable::builtin(Algebra::noncompact);
  const StructureTable copy = StructureTable::from_triples(Algebra::noncompact, t.triples());
  for (int i = 0; i < kF4Dim; ++i)
    for (int j = 0; j < kF4Dim; ++j) CHECK(copy.entries(i, j) == t.entries(i, j));
}
