#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gyrorep/cli.hpp"

using namespace gyrorep;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto p = std::filesystem::temp_directory_path() / ("gyrorep_cli_test_" + name);
  std::ofstream f(p);
  f << contents;
  return p;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

// cell grid of the rendered gyration table: tokens after '|' per table row
std::vector<std::vector<std::string>> parse_grid(const std::string& rendered) {
  std::vector<std::vector<std::string>> grid;
  std::istringstream in(rendered);
  std::string line;
  while (std::getline(in, line)) {
    auto bar = line.find('|');
    if (bar == std::string::npos || line.find("gyr") != std::string::npos) continue;
    std::istringstream cells(line.substr(bar + 1));
    std::vector<std::string> row;
    std::string tok;
    while (cells >> tok) row.push_back(tok);
    if (!row.empty()) grid.push_back(std::move(row));
  }
  return grid;
}

} // namespace

TEST_CASE("verify builtin:g8 passes with the expected summary line") {
  auto r = run({"verify", "builtin:g8"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "gyrogroup: yes; group: no; gyroautomorphisms: 2");
  CHECK(r.out.find("result: pass") != std::string::npos);
}

TEST_CASE("verify a broken table file: exit 1 and a reason") {
  auto p = temp_file("broken.tbl", "2\n0 1\n1 1\n");
  auto r = run({"verify", p.string()});
  CHECK(r.code == 1);
  CHECK(first_line(r.out) == "gyrogroup: no");
  CHECK(r.out.find("error [") != std::string::npos);
}

TEST_CASE("IO and usage errors exit 2") {
  CHECK(run({"verify", "/no/such/file"}).code == 2);
  CHECK(run({"frobnicate", "builtin:g8"}).code == 2);
  CHECK(run({"decompose", "builtin:g8"}).code == 2);                       // missing --field
  CHECK(run({"decompose", "builtin:g8", "--field", "f:4"}).code == 2);     // not prime
  CHECK(run({"mobius-check", "--samples", "10"}).code == 2);               // missing --seed
  CHECK(run({"converse", "builtin:g8"}).code == 2);                        // missing -p
  CHECK(run({}).code == 2);                                                // no subcommand
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("info --emit-table round trips to an identical table") {
  auto r = run({"info", "builtin:g8", "--emit-table"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  auto g = parse_gyro_table(in);
  CHECK(g == builtin_gyrogroup("g8"));
}

TEST_CASE("info text summary") {
  auto r = run({"info", "builtin:klein"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order: 4") != std::string::npos);
  CHECK(r.out.find("group: yes") != std::string::npos);
  CHECK(r.out.find("lgyr dim: 4") != std::string::npos);
}

TEST_CASE("gyr-table grid matches the known g8 gyration pattern") {
  const int pattern[8][8] = {
      {0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 1, 0, 0, 1, 0, 1}, {0, 1, 1, 0, 1, 0, 1, 0}, {0, 1, 1, 0, 0, 1, 0, 1}, {0, 1, 1, 0, 1, 0, 1, 0},
  };
  auto r = run({"gyr-table", "builtin:g8"});
  REQUIRE(r.code == 0);
  auto grid = parse_grid(r.out);
  REQUIRE(grid.size() == 8);
  for (int a = 0; a < 8; ++a) {
    REQUIRE(grid[static_cast<std::size_t>(a)].size() == 8);
    for (int b = 0; b < 8; ++b)
      CHECK(grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == (pattern[a][b] ? "t1" : "I"));
  }
  CHECK(r.out.find("t1: 0->0 1->1 2->2 3->3 4->6 5->7 6->4 7->5") != std::string::npos);
}

TEST_CASE("groups render an all-identity gyration table") {
  auto r = run({"gyr-table", "builtin:cyclic:4"});
  REQUIRE(r.code == 0);
  for (const auto& row : parse_grid(r.out))
    for (const auto& cell : row) CHECK(cell == "I");
}

TEST_CASE("lgyr of cyclic:4: four singleton classes") {
  auto r = run({"lgyr", "builtin:cyclic:4", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lgyr_dim"] == 4);
  CHECK(j["classes"].size() == 4);
  for (const auto& c : j["classes"]) CHECK(c.size() == 1);
}

TEST_CASE("decompose builtin:g8 over GF(3): four certified lines via the CLI") {
  auto r = run({"decompose", "builtin:g8", "--field", "f:3", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["summands"].size() == 4);
  for (const auto& s : j["summands"]) {
    CHECK(s["dim"] == 1);
    CHECK(s["irreducible"] == "yes");
  }
  CHECK(j["direct_sum_verified"] == true);
}

TEST_CASE("decompose reports a dividing characteristic as a hypothesis failure") {
  auto r = run({"decompose", "builtin:g8", "--field", "f:2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("characteristic_divides_order") != std::string::npos);
}

TEST_CASE("decompose honors the point bound") {
  auto r = run({"decompose", "builtin:g8", "--field", "f:3", "--bound", "8"});
  CHECK(r.code == 2);
  CHECK(r.err.find("search_space_too_large") != std::string::npos);
}

TEST_CASE("maschke over GF(3) and over Q with U = Fix") {
  auto p = temp_file("fix.vec", "1 1 1 1\n");
  for (const char* field : {"f:3", "q"}) {
    auto r = run({"maschke", "builtin:g8", "--field", field, "--subspace", p.string(), "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["complement"]["dim"] == 3);
    for (auto& [key, value] : j["checks"].items()) CHECK_MESSAGE(value == true, key);
  }
}

TEST_CASE("maschke rejects a non-invariant subspace with exit 1") {
  auto p = temp_file("notinv.vec", "1 0 0 0\n");
  auto r = run({"maschke", "builtin:g8", "--field", "f:3", "--subspace", p.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("not_invariant") != std::string::npos);
}

TEST_CASE("maschke accepts a representation file via --rep") {
  PrimeField f3(3);
  auto klein = builtin_gyrogroup("klein");
  // the regular permutation representation of the Klein group on GF(3)^4
  std::ostringstream repfile;
  repfile << 4 << "\n";
  for (int a = 0; a < 4; ++a) {
    Matrix<PrimeField> m(f3, 4, 4);
    for (int x = 0; x < 4; ++x) m(klein.add(a, x), x) = 1;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) repfile << (j ? " " : "") << m(i, j);
      repfile << "\n";
    }
  }
  auto rep = temp_file("klein.rep", repfile.str());
  auto sub = temp_file("diag.vec", "1 1 1 1\n");
  auto r = run({"maschke", "builtin:klein", "--field", "f:3", "--subspace", sub.string(), "--rep", rep.string(),
                "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["complement"]["dim"] == 3);
}

TEST_CASE("converse exit codes: certified 0, hypothesis failure 1") {
  for (const char* name : {"builtin:cyclic:2", "builtin:cyclic:4", "builtin:klein"}) {
    auto r = run({"converse", name, "-p", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no invariant complement exists") != std::string::npos);
  }
  auto r = run({"converse", "builtin:g8", "-p", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("hypothesis (exists f in Lgyr with sigma(f) != 0): fails") != std::string::npos);

  auto bad = run({"converse", "builtin:klein", "-p", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("prime_does_not_divide_order") != std::string::npos);
}

TEST_CASE("converse honors the point bound") {
  // GF(2)^6 has 64 points, over the bound of 16
  auto r = run({"converse", "builtin:cyclic:6", "-p", "2", "--bound", "16"});
  CHECK(r.code == 2);
  CHECK(r.err.find("search_space_too_large") != std::string::npos);
}

TEST_CASE("converse JSON carries the full certificate") {
  auto r = run({"converse", "builtin:klein", "-p", "2", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["hypothesis_holds"] == true);
  CHECK(j["candidates_checked"] == 8);
  CHECK(j["candidates"].size() == 8);
  CHECK(j["complement_found"].is_null());
  for (const auto& c : j["candidates"]) CHECK(c["status"] == "not_invariant");
}

TEST_CASE("chain renders the g8 and cyclic:2 chains") {
  auto r = run({"chain", "builtin:g8", "-p", "2", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["chain"] == "{0} < Fix < U = Lgyr < L(G)");
  CHECK(j["dims"]["fix"] == 1);
  CHECK(j["dims"]["u"] == 4);
  CHECK(j["dims"]["lgyr"] == 4);
  CHECK(j["dims"]["lg"] == 8);
  CHECK(j["remarks_hold"] == true);

  auto r2 = run({"chain", "builtin:cyclic:2", "-p", "2"});
  CHECK(r2.code == 0);
  CHECK(r2.out.find("{0} < Fix = U < Lgyr = L(G)") != std::string::npos);

  CHECK(run({"chain", "builtin:g8", "-p", "3"}).code == 1);
}

TEST_CASE("mobius-check passes at the documented seed and fails on an absurd tolerance") {
  auto r = run({"mobius-check", "--samples", "1000", "--seed", "42"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: pass") != std::string::npos);
  auto strict = run({"mobius-check", "--samples", "1000", "--seed", "42", "--tol", "1e-30"});
  CHECK(strict.code == 1);
  auto bad = run({"mobius-check", "--samples", "0", "--seed", "1"});
  CHECK(bad.code == 2);
}

TEST_CASE("json output is byte-identical across runs") {
  auto fix = temp_file("fix2.vec", "1 1 1 1\n");
  std::vector<std::vector<std::string>> cmds = {
      {"verify", "builtin:g8", "--json"},
      {"info", "builtin:g8", "--json", "--emit-table"},
      {"gyr-table", "builtin:g8", "--json"},
      {"lgyr", "builtin:g8", "--json"},
      {"regrep", "builtin:g8", "--field", "f:3", "--json"},
      {"decompose", "builtin:g8", "--field", "f:3", "--json"},
      {"decompose", "builtin:g8", "--field", "q", "--json"},
      {"maschke", "builtin:g8", "--field", "q", "--subspace", fix.string(), "--json"},
      {"converse", "builtin:klein", "-p", "2", "--json"},
      {"chain", "builtin:g8", "-p", "2", "--json"},
      {"mobius-check", "--samples", "200", "--seed", "7", "--json"},
  };
  for (const auto& cmd : cmds) {
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK_MESSAGE(a.out == b.out, cmd[0]);
    CHECK(a.code == b.code);
    CHECK(nlohmann::json::accept(a.out));
  }
}

TEST_CASE("regrep JSON carries permutation matrices and the g8 coincidences") {
  auto r = run({"regrep", "builtin:g8", "--field", "q", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(j["degree"] == 4);
  CHECK(j["matrices"].size() == 8);
  auto coinc = j["coincidences"];
  REQUIRE(coinc.size() == 4);
  CHECK(coinc[0] == nlohmann::json::array({0, 3}));
  CHECK(coinc[1] == nlohmann::json::array({1, 2}));
}

TEST_CASE("a gyrogroup loaded from a written file works end to end") {
  std::ostringstream table;
  table << "# an order-8 gyrogroup\n";
  emit_gyro_table(builtin_gyrogroup("g8"), table);
  auto p = temp_file("g8.tbl", table.str());
  auto r = run({"verify", p.string()});
  CHECK(r.code == 0);
  auto d = run({"decompose", p.string(), "--field", "f:3", "--json"});
  CHECK(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["summands"].size() == 4);
}
