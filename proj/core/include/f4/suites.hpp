#pragma once

#include "f4/polarity.hpp"

#include <map>
#include <string>
#include <vector>

namespace f4 {

struct CheckFailure {
  std::string id;
  std::string witness;
};

// Result of one verification sweep. The report (name, check count, failures)
// is deterministic: fixed iteration order, failures sorted by check id
// before returning. Wall time is informational only and never part of the
// byte-stable output.
struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<CheckFailure> failures;
  // Check counts keyed by the id prefix before the argument list, e.g.
  // "jacobi/defect" -> 22100. Lets callers pin exact sweep sizes.
  std::map<std::string, long> categories;
  // Informational lines for the report (dimensions, computed constants).
  std::vector<std::string> notes;
  double wall_ms = 0;

  bool passed() const { return failures.empty(); }
  long category(const std::string& prefix) const;
};

struct SuiteOptions {
  int jobs = 1;
  // Replacement structure-constant tables for the sweeps that run off a
  // table (jacobi, invariance); used to validate exported tables and as the
  // corrupted-table negative control.
  const StructureTable* override_compact = nullptr;
  const StructureTable* override_noncompact = nullptr;
};

// The suite surface: octonion, triality, jacobi, invariance, roots, iwasawa,
// geometry, table1, polarity. jacobi and invariance take the algebra into
// account; the others ignore it. Unknown names throw std::invalid_argument.
std::vector<std::string> suite_names();
bool suite_uses_algebra(const std::string& suite);

SuiteResult run_suite(const std::string& suite, Algebra alg, const SuiteOptions& opt = {});

// Every suite in order, with jacobi and invariance once per algebra.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt = {});

}  // namespace f4
