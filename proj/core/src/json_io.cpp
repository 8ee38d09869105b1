#include "f4/json_io.hpp"

#include "f4/triality.hpp"

#include <fstream>
#include <stdexcept>

namespace f4 {

namespace {

void require_schema(const nlohmann::json& doc, const std::string& kind) {
  if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != kSchemaVersion)
    throw std::invalid_argument("json import: missing or unsupported schema version");
  if (!doc.contains("kind") || doc["kind"] != kind)
    throw std::invalid_argument("json import: expected kind '" + kind + "'");
}

nlohmann::json matrix_to_json(const MatQ& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json export_structure_constants(const StructureTable& table) {
  nlohmann::json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "structure-constants";
  doc["algebra"] = algebra_name(table.algebra());
  doc["dim"] = kF4Dim;
  doc["basis_order"] =
      "wedge e_i^e_j, 0<=i<j<8 lexicographic (28); then octonion slots x, y, z (8 each)";
  nlohmann::json consts = nlohmann::json::array();
  for (const auto& t : table.triples()) {
    nlohmann::json entry;
    entry["i"] = t.i;
    entry["j"] = t.j;
    entry["k"] = t.k;
    entry["c"] = rat_to_string(t.c);
    consts.push_back(std::move(entry));
  }
  doc["constants"] = std::move(consts);
  return doc;
}

StructureTable import_structure_constants(const nlohmann::json& doc) {
  require_schema(doc, "structure-constants");
  const Algebra alg = algebra_from_name(doc.at("algebra").get<std::string>());
  if (doc.at("dim") != kF4Dim)
    throw std::invalid_argument("structure-constants import: wrong dimension");
  std::vector<StructureTable::Triple> triples;
  for (const auto& entry : doc.at("constants")) {
    triples.push_back(StructureTable::Triple{
        entry.at("i").get<int>(), entry.at("j").get<int>(), entry.at("k").get<int>(),
        rat_from_string(entry.at("c").get<std::string>())});
  }
  return StructureTable::from_triples(alg, triples);
}

nlohmann::json export_automorphisms() {
  nlohmann::json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "automorphisms";
  doc["dim"] = kWedgeDim;
  doc["basis_order"] = "wedge e_i^e_j, 0<=i<j<8 lexicographic";
  doc["pi"] = matrix_to_json(pi_matrix());
  doc["kappa"] = matrix_to_json(kappa_matrix());
  doc["lambda"] = matrix_to_json(lambda_matrix());
  return doc;
}

nlohmann::json export_subspace(const Subspace& s, const std::string& name) {
  nlohmann::json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "subspace";
  doc["name"] = name;
  doc["ambient_dim"] = s.ambient_dim;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& row : s.basis) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& c : row) jrow.push_back(rat_to_string(c));
    basis.push_back(std::move(jrow));
  }
  doc["basis"] = std::move(basis);
  return doc;
}

Subspace import_subspace(const nlohmann::json& doc) {
  require_schema(doc, "subspace");
  const std::size_t ambient = doc.at("ambient_dim").get<std::size_t>();
  std::vector<Vec> rows;
  for (const auto& jrow : doc.at("basis")) {
    Vec row;
    row.reserve(jrow.size());
    for (const auto& c : jrow) row.push_back(rat_from_string(c.get<std::string>()));
    rows.push_back(std::move(row));
  }
  return canonicalize(ambient, rows);
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("cannot parse '" + path + "': " + e.what());
  }
  return doc;
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << doc.dump(2) << "\n";
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace f4
