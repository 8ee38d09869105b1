#include "f4/json_io.hpp"

#include "f4/geometry.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace f4;

TEST_CASE("rational serialization") {
  CHECK(rat_to_string(Rat(0)) == "0/1");
  CHECK(rat_to_string(Rat(-3, 2)) == "-3/2");
  CHECK(rat_to_string(Rat(4, 2)) == "2/1");
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("-6/4") == Rat(-3, 2));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x/2"), std::invalid_argument);
  testing::Gen gen;
  for (int t = 0; t < 20; ++t) {
    const Rat r = gen.rat(-50, 50);
    CHECK(rat_from_string(rat_to_string(r)) == r);
  }
}

TEST_CASE("structure constant export/import round trip is exact and byte stable") {
  for (const Algebra alg : {Algebra::compact, Algebra::noncompact}) {
    const StructureTable& t = StructureTable::builtin(alg);
    const nlohmann::json a = export_structure_constants(t);
    const StructureTable imported = import_structure_constants(a);
    const nlohmann::json b = export_structure_constants(imported);
    CHECK(a.dump(2) == b.dump(2));
    for (int i = 0; i < kF4Dim; ++i)
      for (int j = 0; j < kF4Dim; ++j) CHECK(imported.entries(i, j) == t.entries(i, j));
  }
}

TEST_CASE("structure constants are scalar strings, never numbers") {
  const nlohmann::json doc =
      export_structure_constants(StructureTable::builtin(Algebra::compact));
  CHECK(doc.at("schema") == 1);
  for (const auto& entry : doc.at("constants")) {
    CHECK(entry.at("c").is_string());
  }
}

TEST_CASE("automorphism export matches the in-memory matrices") {
  const nlohmann::json doc = export_automorphisms();
  REQUIRE(doc.at("pi").size() == kWedgeDim);
  for (int i = 0; i < kWedgeDim; ++i) {
    for (int j = 0; j < kWedgeDim; ++j) {
      CHECK(rat_from_string(doc.at("pi")[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                .get<std::string>()) ==
            pi_matrix()(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      CHECK(rat_from_string(doc.at("lambda")[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                .get<std::string>()) ==
            lambda_matrix()(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
}

TEST_CASE("subspace export/import round trip") {
  const Subspace s = sp12_algebra();
  const nlohmann::json a = export_subspace(s, "sp12");
  const Subspace back = import_subspace(a);
  CHECK(back == s);
  CHECK(export_subspace(back, "sp12").dump(2) == a.dump(2));
}

TEST_CASE("imports validate the schema") {
  nlohmann::json bad;
  bad["schema"] = 99;
  bad["kind"] = "subspace";
  CHECK_THROWS_AS(import_subspace(bad), std::invalid_argument);
  nlohmann::json wrong_kind = export_automorphisms();
  CHECK_THROWS_AS(import_structure_constants(wrong_kind), std::invalid_argument);
}
