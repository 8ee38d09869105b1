// f4cli - verification suites, reports and JSON exports for the exact
// octonionic models of f4 and f4*.
//
// Exit codes: 0 success, 1 verification failures, 2 usage or I/O errors.

#include "f4/json_io.hpp"
#include "f4/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using namespace f4;

struct VerifyArgs {
  std::string suite = "all";
  std::string algebra = "f4";
  int jobs = 1;
  bool json = false;
  std::string table_path;
};

struct ExportArgs {
  std::string what;
  std::string algebra = "f4";
  std::string name = "sp12";
  std::string out;
};

struct ReportArgs {
  std::string kind;
  std::string std_label;
  std::string example;
  std::string in_path;
  bool json = false;
};

nlohmann::json suite_to_json(const SuiteResult& r) {
  nlohmann::json doc;
  doc["name"] = r.name;
  doc["checks"] = r.checks;
  doc["notes"] = r.notes;
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json jf;
    jf["id"] = f.id;
    jf["witness"] = f.witness;
    fails.push_back(std::move(jf));
  }
  doc["failures"] = std::move(fails);
  return doc;
}

void print_suite_text(const SuiteResult& r) {
  std::cout << "[suite " << r.name << "] checks=" << r.checks
            << " failures=" << r.failures.size() << "\n";
  for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
  for (const auto& f : r.failures) {
    std::cout << "  FAIL " << f.id;
    if (!f.witness.empty()) std::cout << "  witness=" << f.witness;
    std::cout << "\n";
  }
  std::cerr << "  (" << r.name << ": " << r.wall_ms << " ms)\n";
}

int run_verify(const VerifyArgs& args) {
  SuiteOptions opt;
  opt.jobs = args.jobs;
  std::optional<StructureTable> imported;
  if (!args.table_path.empty()) {
    imported = import_structure_constants(read_json_file(args.table_path));
    if (imported->algebra() == Algebra::compact)
      opt.override_compact = &*imported;
    else
      opt.override_noncompact = &*imported;
  }

  std::vector<SuiteResult> results;
  if (args.suite == "all") {
    results = run_all_suites(opt);
  } else {
    results.push_back(run_suite(args.suite, algebra_from_name(args.algebra), opt));
  }

  long checks = 0, failures = 0;
  for (const auto& r : results) {
    checks += r.checks;
    failures += static_cast<long>(r.failures.size());
  }

  if (args.json) {
    nlohmann::json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "verify-report";
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : results) suites.push_back(suite_to_json(r));
    doc["suites"] = std::move(suites);
    doc["checks"] = checks;
    doc["failures"] = failures;
    doc["pass"] = failures == 0;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) print_suite_text(r);
    std::cout << (failures == 0 ? "VERIFY PASS" : "VERIFY FAIL") << " (" << results.size()
              << " suites, " << checks << " checks, " << failures << " failures)\n";
  }
  return failures == 0 ? 0 : 1;
}

Subspace named_subalgebra(const std::string& name) {
  if (name == "sp12") return sp12_algebra();
  if (name == "n") return n_space();
  if (name == "an") return an_space();
  if (name == "parabolic") return parabolic_space();
  if (name == "k0") return k0_space();
  if (name == "a") return a_space();
  if (name == "v") return v_space();
  if (name == "z") return z_space();
  if (name == "k") return k_space();
  const auto examples = example_subalgebras();
  const auto it = examples.find(name);
  if (it != examples.end()) return it->second;
  throw std::invalid_argument(
      "unknown subalgebra '" + name +
      "' (known: sp12, n, an, parabolic, k0, a, v, z, k, amz, coh2nilp)");
}

int run_export(const ExportArgs& args) {
  nlohmann::json doc;
  if (args.what == "structure-constants") {
    doc = export_structure_constants(StructureTable::builtin(algebra_from_name(args.algebra)));
  } else if (args.what == "automorphisms") {
    doc = export_automorphisms();
  } else if (args.what == "subalgebra") {
    doc = export_subspace(named_subalgebra(args.name), args.name);
  } else {
    throw CLI::ValidationError("--what must be structure-constants, automorphisms or subalgebra");
  }
  write_json_file(args.out, doc);
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

nlohmann::json classify_to_json(const Subspace& L) {
  const TgLabel label = classify_triple_system(L);
  const Subspace G = generated_subalgebra(Algebra::noncompact, L);
  nlohmann::json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "classify-report";
  doc["label"] = label_name(label);
  doc["dim"] = L.dim();
  doc["generated_dim"] = G.dim();
  return doc;
}

int run_report_classify(const ReportArgs& args) {
  Subspace L;
  if (!args.std_label.empty()) {
    L = std_triple(label_from_name(args.std_label));
  } else if (!args.in_path.empty()) {
    L = import_subspace(read_json_file(args.in_path));
  } else {
    throw CLI::ValidationError("report classify needs --std LABEL or --in PATH");
  }
  const nlohmann::json doc = classify_to_json(L);
  if (args.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "triple system: dim " << doc["dim"] << ", generates a subalgebra of dim "
              << doc["generated_dim"] << "\n"
              << "class: " << doc["label"].get<std::string>() << "\n";
  }
  return 0;
}

nlohmann::json polarity_to_json(const PolarityReport& report) {
  nlohmann::json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "polarity-report";
  doc["h_dim"] = report.h.dim();
  doc["sigma_dim"] = report.sigma.dim();
  doc["sigma_bracket"] = export_subspace(report.sigma_bracket, "sigma-bracket");
  doc["orthogonality_holds"] = report.orthogonality_holds;
  doc["slice_condition"] = report.slice_condition;
  if (report.witness) {
    nlohmann::json w;
    w["bracket_elt"] = vec_to_string(report.witness->bracket_elt);
    w["h_elt"] = vec_to_string(report.witness->h_elt);
    w["pairing"] = rat_to_string(report.witness->pairing);
    doc["witness"] = std::move(w);
  }
  return doc;
}

int run_report_polarity(const ReportArgs& args) {
  Subspace h, sigma;
  if (!args.example.empty()) {
    const Octonion e = Octonion::unit();
    const Octonion e1 = Octonion::basis(1);
    const Octonion zero;
    if (args.example == "coh2nilp") {
      h = example_subalgebras().at("coh2nilp");
      sigma = canonicalize(kF4Dim, {to_vec52(pstar_elt({e, zero})),
                                    to_vec52(pstar_elt({zero, e}))});
    } else if (args.example == "h8") {
      h = sum(a_space(), z_space());
      sigma = canonicalize(kF4Dim, {to_vec52(pstar_elt({zero, e})),
                                    to_vec52(pstar_elt({zero, e1}))});
    } else {
      throw CLI::ValidationError("unknown polarity example (known: coh2nilp, h8)");
    }
  } else if (!args.in_path.empty()) {
    const nlohmann::json doc = read_json_file(args.in_path);
    h = import_subspace(doc.at("h"));
    sigma = import_subspace(doc.at("sigma"));
  } else {
    throw CLI::ValidationError("report polarity needs --example NAME or --in PATH");
  }

  const PolarityReport report = section_orthogonality(h, sigma);
  if (args.json) {
    std::cout << polarity_to_json(report).dump(2) << "\n";
    return 0;
  }
  std::cout << "h: dim " << report.h.dim() << ", sigma: dim " << report.sigma.dim()
            << ", [sigma,sigma]: dim " << report.sigma_bracket.dim() << "\n";
  std::cout << "orthogonality <h,[sigma,sigma]> = 0: "
            << (report.orthogonality_holds ? "holds" : "fails") << "\n";
  if (report.witness) {
    std::cout << "witness: <" << vec_to_string(report.witness->bracket_elt) << ", "
              << vec_to_string(report.witness->h_elt)
              << "> = " << rat_to_string(report.witness->pairing) << "\n";
  }
  if (report.orthogonality_holds && report.sigma.dim() >= 1) {
    const TripleSystemCheck tri = is_lie_triple(report.sigma);
    if (tri.ok)
      std::cout << "section class: " << label_name(classify_triple_system(report.sigma)) << "\n";
  }
  std::cout << "slice representation condition: " << report.slice_condition << "\n";
  return 0;
}

int run_report_table1(const ReportArgs& args) {
  struct Row {
    const char* name;
    const char* label;  // empty for the fixed point row
    std::size_t expected_z;
    int expected_n;  // -1 marks no normalizer row
  };
  const Row rows[] = {
      {"pt", "", 36, -1},       {"RH2", "RH2", 14, 17}, {"CH2", "CH2", 8, 16},
      {"HH2", "HH2", 3, 24},    {"H1", "H1", 21, 22},   {"H2", "H2", 15, 18},
      {"H3", "H3", 10, 16},     {"H4", "H4", 6, 16},    {"H5", "H5", 3, 18},
      {"H6", "H6", 1, 22},      {"H7", "H7", 0, 28},    {"H8", "H8", 0, 36},
  };
  const Subspace k = k_space();
  const Subspace full = Subspace::full(kF4Dim);

  nlohmann::json jrows = nlohmann::json::array();
  bool all_match = true;
  for (const auto& row : rows) {
    const Subspace L = *row.label == '\0' ? Subspace::zero(kF4Dim)
                                          : std_triple(label_from_name(row.label));
    const std::size_t zdim = centralizer_in(Algebra::noncompact, L, k).dim();
    std::size_t ndim = 0;
    if (row.expected_n >= 0) {
      const Subspace G = generated_subalgebra(Algebra::noncompact, L);
      ndim = normalizer_in(Algebra::noncompact, G, full).dim();
    }
    const bool match =
        zdim == row.expected_z &&
        (row.expected_n < 0 || ndim == static_cast<std::size_t>(row.expected_n));
    all_match = all_match && match;
    nlohmann::json jr;
    jr["P"] = row.name;
    jr["centralizer_dim"] = zdim;
    jr["centralizer_expected"] = row.expected_z;
    if (row.expected_n >= 0) {
      jr["normalizer_dim"] = ndim;
      jr["normalizer_expected"] = row.expected_n;
    }
    jr["match"] = match;
    jrows.push_back(std::move(jr));
  }

  // the codimension-d normalizers inside k0; codim 4 is position dependent
  nlohmann::json jnk0 = nlohmann::json::array();
  const int codims[] = {0, 1, 2, 3, 4, 5, 6, 7};
  const int expected_nk0[] = {21, 14, 9, 6, -1, 6, 9, 14};
  for (int i = 0; i < 8; ++i) {
    const std::size_t dim = normalizer_nk0(coordinate_m(codims[i])).dim();
    nlohmann::json jr;
    jr["codim"] = codims[i];
    jr["dim"] = dim;
    if (expected_nk0[i] >= 0) {
      jr["expected"] = expected_nk0[i];
      const bool match = dim == static_cast<std::size_t>(expected_nk0[i]);
      jr["match"] = match;
      all_match = all_match && match;
    } else {
      jr["expected"] = "position-dependent";
    }
    jnk0.push_back(std::move(jr));
  }

  if (args.json) {
    nlohmann::json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "table1-report";
    doc["rows"] = std::move(jrows);
    doc["normalizer_nk0"] = std::move(jnk0);
    doc["all_match"] = all_match;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "P      Z(P) dim (expected)   N(P) dim (expected)\n";
    for (const auto& jr : jrows) {
      std::string name = jr["P"].get<std::string>();
      name.resize(6, ' ');
      std::cout << name << " " << jr["centralizer_dim"] << " (" << jr["centralizer_expected"]
                << ")";
      if (jr.contains("normalizer_dim"))
        std::cout << "   " << jr["normalizer_dim"] << " (" << jr["normalizer_expected"] << ")";
      else
        std::cout << "   -";
      std::cout << (jr["match"].get<bool>() ? "" : "   MISMATCH") << "\n";
    }
    std::cout << "normalizers of coordinate subspaces m in k0 by codim:\n";
    for (const auto& jr : jnk0) {
      std::cout << "  codim " << jr["codim"] << ": dim " << jr["dim"] << " (expected "
                << jr["expected"] << ")\n";
    }
    std::cout << (all_match ? "TABLE1 MATCH" : "TABLE1 MISMATCH") << "\n";
  }
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact octonionic models of the exceptional Lie algebra f4 and the isometry "
               "algebra of the Cayley hyperbolic plane"};
  app.require_subcommand(1);

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", vargs.suite,
                     "octonion, triality, jacobi, invariance, roots, iwasawa, geometry, "
                     "table1, polarity, all")
      ->default_val("all");
  verify->add_option("--algebra", vargs.algebra, "f4 or f4star (jacobi/invariance only)")
      ->check(CLI::IsMember({"f4", "f4star"}));
  verify->add_option("--jobs", vargs.jobs, "worker threads for the big sweeps")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", vargs.json, "machine-readable report on stdout");
  verify->add_option("--table", vargs.table_path,
                     "run the jacobi/invariance sweeps against an imported "
                     "structure-constant JSON file instead of the built-in table");

  ExportArgs eargs;
  CLI::App* exp = app.add_subcommand("export", "write algebra data as JSON");
  exp->add_option("--what", eargs.what, "structure-constants, automorphisms or subalgebra")
      ->required();
  exp->add_option("--algebra", eargs.algebra, "f4 or f4star (structure-constants)")
      ->check(CLI::IsMember({"f4", "f4star"}));
  exp->add_option("--name", eargs.name,
                  "subalgebra name: sp12, n, an, parabolic, k0, a, v, z, k, amz, coh2nilp");
  exp->add_option("--out", eargs.out, "output path")->required();

  ReportArgs rargs;
  CLI::App* report = app.add_subcommand("report", "print analysis reports");
  report->add_option("kind", rargs.kind, "classify, polarity or table1")->required();
  report->add_option("--std", rargs.std_label, "standard triple system label (classify)");
  report->add_option("--example", rargs.example, "named example (polarity): coh2nilp, h8");
  report->add_option("--in", rargs.in_path, "input JSON path");
  report->add_flag("--json", rargs.json, "machine-readable report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(vargs);
    if (exp->parsed()) return run_export(eargs);
    if (report->parsed()) {
      if (rargs.kind == "classify") return run_report_classify(rargs);
      if (rargs.kind == "polarity") return run_report_polarity(rargs);
      if (rargs.kind == "table1") return run_report_table1(rargs);
      std::cerr << "error: unknown report kind '" << rargs.kind << "'\n";
      return 2;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
