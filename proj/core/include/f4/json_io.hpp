#pragma once

#include "f4/structure.hpp"

#include <json.hpp>

#include <string>

namespace f4 {

// All documents carry "schema": 1 and serialize every scalar as a "p/q"
// string; JSON numbers are never used for algebra data. Key order is the
// library's (sorted) order, so re-exporting an imported document reproduces
// it byte for byte.
inline constexpr int kSchemaVersion = 1;

nlohmann::json export_structure_constants(const StructureTable& table);
StructureTable import_structure_constants(const nlohmann::json& doc);

// The 28x28 matrices of pi, kappa, lambda on the wedge basis.
nlohmann::json export_automorphisms();

nlohmann::json export_subspace(const Subspace& s, const std::string& name);
Subspace import_subspace(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace f4
