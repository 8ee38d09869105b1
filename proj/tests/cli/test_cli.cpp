// End-to-end tests of the f4cli binary: exit codes, determinism, the export
// round trip, and the corrupted-table negative control.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f4/geometry.hpp"
#include "f4/json_io.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "f4cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(F4CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out);
  return r;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run_cli("verify --suite octonion").exit_code == 0);
  CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
  CHECK(run_cli("verify --algebra so99 --suite jacobi").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("export --what nothing --out x.json").exit_code == 2);
}

TEST_CASE("the jacobi sweep reports its full size") {
  const RunResult r = run_cli("verify --suite jacobi --algebra f4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("checks=22100") != std::string::npos);
  CHECK(r.out.find("failures=0") != std::string::npos);
  CHECK(r.out.find("VERIFY PASS") != std::string::npos);
}

TEST_CASE("verify output is byte-identical across runs and job counts") {
  const RunResult a = run_cli("verify --suite roots");
  const RunResult b = run_cli("verify --suite roots");
  CHECK(a.out == b.out);
  const RunResult c = run_cli("verify --suite jacobi --algebra f4star --jobs 1");
  const RunResult d = run_cli("verify --suite jacobi --algebra f4star --jobs 4");
  CHECK(c.out == d.out);
  const RunResult ja = run_cli("verify --suite iwasawa --json");
  const RunResult jb = run_cli("verify --suite iwasawa --json");
  CHECK(ja.out == jb.out);
  CHECK(nlohmann::json::parse(ja.out).at("pass") == true);
}

TEST_CASE("export, import and the corrupted-table control") {
  const fs::path table = scratch_dir() / "sc.json";
  CHECK(run_cli("export --what structure-constants --algebra f4 --out " + table.string())
            .exit_code == 0);

  // the exported table drives a clean verify
  CHECK(run_cli("verify --suite jacobi --algebra f4 --table " + table.string()).exit_code == 0);

  // corrupt one constant; the sweeps must notice and exit 1
  nlohmann::json doc = nlohmann::json::parse(read_file(table));
  doc["constants"][0]["c"] = "5/7";
  const fs::path bad = scratch_dir() / "sc_bad.json";
  {
    std::ofstream out(bad);
    out << doc.dump(2) << "\n";
  }
  const RunResult r = run_cli("verify --suite all --table " + bad.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("VERIFY FAIL") != std::string::npos);

  // a missing file is a usage error
  CHECK(run_cli("verify --suite jacobi --table /no/such/file.json").exit_code == 2);
}

TEST_CASE("subalgebra export") {
  const fs::path sp12 = scratch_dir() / "sp12.json";
  CHECK(run_cli("export --what subalgebra --name sp12 --out " + sp12.string()).exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(read_file(sp12));
  CHECK(doc.at("basis").size() == 21);
  CHECK(doc.at("ambient_dim") == 52);

  // classify the exported subspace's p* part via report --in: use a triple
  // system export instead (HH2 is not exported; use report --std directly)
  const RunResult r = run_cli("report classify --std HH2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("HH2") != std::string::npos);
  CHECK(r.out.find("21") != std::string::npos);
}

TEST_CASE("classify from a subspace file") {
  const fs::path in = scratch_dir() / "triple.json";
  {
    std::ofstream out(in);
    out << f4::export_subspace(f4::std_triple(f4::TgLabel::CH2), "ch2").dump(2) << "\n";
  }
  const RunResult r = run_cli("report classify --in " + in.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("CH2") != std::string::npos);
  // a subspace outside p* is a usage error, not a crash
  const fs::path bad = scratch_dir() / "not_triple.json";
  {
    std::ofstream out(bad);
    out << f4::export_subspace(f4::k_space(), "k").dump(2) << "\n";
  }
  CHECK(run_cli("report classify --in " + bad.string()).exit_code == 2);
}

TEST_CASE("polarity from an input file") {
  nlohmann::json doc;
  doc["h"] = f4::export_subspace(f4::n_space(), "n");
  doc["sigma"] = f4::export_subspace(
      f4::canonicalize(f4::kF4Dim,
                       {f4::to_vec52(f4::pstar_elt({f4::Octonion::unit(), f4::Octonion()}))}),
      "line");
  const fs::path in = scratch_dir() / "polarity_input.json";
  {
    std::ofstream out(in);
    out << doc.dump(2) << "\n";
  }
  const RunResult r = run_cli("report polarity --in " + in.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("holds") != std::string::npos);
}

TEST_CASE("reports") {
  const RunResult t1 = run_cli("report table1");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out.find("TABLE1 MATCH") != std::string::npos);

  const RunResult pol = run_cli("report polarity --example coh2nilp");
  CHECK(pol.exit_code == 0);
  CHECK(pol.out.find("holds") != std::string::npos);
  CHECK(pol.out.find("RH2") != std::string::npos);

  const RunResult h8 = run_cli("report polarity --example h8 --json");
  CHECK(h8.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(h8.out);
  CHECK(doc.at("orthogonality_holds") == false);
  CHECK(doc.at("witness").at("pairing").get<std::string>() == "-4/1");
  CHECK(doc.at("slice_condition") == "not evaluated");

  CHECK(run_cli("report classify").exit_code == 2);
  CHECK(run_cli("report nothing").exit_code == 2);
}
