#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "liebi/checks.hpp"

using namespace liebi;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "liebi_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string(LIEBI_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

CheckConfig config(const std::string& check, int window = 6) {
  CheckConfig cfg;
  cfg.check = check;
  cfg.window = window;
  return cfg;
}

const char* kBrokenJacobi =
    "algebra broken\n"
    "family L degree n\n"
    "family M degree n\n"
    "bracket [L(m), L(n)] = (n - m) * L(m+n)\n"
    "bracket [L(m), M(n)] = M(m+n)\n";

}  // namespace

TEST_CASE("every check passes or reports evidence on the builtin algebra") {
  for (const auto& name : check_names()) {
    if (name == "hom-l0") continue;  // covered with a smaller window below
    const Report r = run_check(config(name));
    INFO(name);
    CHECK(r.status != Status::fail);
    CHECK_FALSE(r.witness.has_value());
    CHECK(exit_code(r) == 0);
  }
  CHECK(run_check(config("hom-l0", 3)).status == Status::pass);
}

TEST_CASE("evidence status for window-truncated claims") {
  for (const char* name : {"der-evidence", "skew-saturation", "joint-kernel"})
    CHECK(run_check(config(name)).status == Status::evidence);
  for (const char* name : {"jacobi", "cybe-taft", "l1-identities"})
    CHECK(run_check(config(name)).status == Status::pass);
}

TEST_CASE("jacobi on the builtin algebra") {
  const Report r = run_check(config("jacobi"));
  CHECK(r.status == Status::pass);
  CHECK(r.details["triples_checked"] == 27 * 27 * 27);
}

TEST_CASE("cybe-taft covers the Taft pairs in the window") {
  const Report r = run_check(config("cybe-taft"));
  CHECK(r.status == Status::pass);
  CHECK(r.details["pairs_verified"].get<int>() >= 20);
}

TEST_CASE("broken file fails jacobi with a witness") {
  CheckConfig cfg = config("jacobi", 4);
  cfg.algebra = write_file("broken.lialg", kBrokenJacobi);
  const Report r = run_check(cfg);
  CHECK(r.status == Status::fail);
  REQUIRE(r.witness.has_value());
  CHECK((*r.witness)["triple"].size() == 3);
  CHECK(exit_code(r) == 1);
  const std::string text = format_report(r, Format::text);
  CHECK(text.find("witness: triple=") != std::string::npos);
}

TEST_CASE("fixture file runs every check the builtin runs") {
  CheckConfig cfg = config("dsl-roundtrip", 8);
  cfg.algebra = LIEBI_FIXTURE;
  CHECK(run_check(cfg).status == Status::pass);
  cfg.check = "l1-identities";
  CHECK(run_check(cfg).status == Status::pass);
  cfg.check = "jacobi";
  cfg.window = 4;
  CHECK(run_check(cfg).status == Status::pass);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(run_check(config("nope")), ConfigError);
  CheckConfig bad = config("jacobi", 1);
  bad.margin = 2;
  CHECK_THROWS_AS(run_check(bad), ConfigError);
  bad = config("jacobi");
  bad.margin = -1;
  CHECK_THROWS_AS(run_check(bad), ConfigError);
  bad = config("jacobi");
  bad.algebra = write_file("syntax.lialg", "algebra x\nfamily L degre n\n");
  CHECK_THROWS_WITH_AS(run_check(bad), doctest::Contains("line 2"), ConfigError);
  bad.algebra = scratch("missing.lialg").string();
  CHECK_THROWS_AS(run_check(bad), ConfigError);
  bad.algebra = "builtin:witt";
  CHECK_THROWS_AS(run_check(bad), ConfigError);
  bad = config("l1-identities");
  bad.algebra = write_file("small.lialg", kBrokenJacobi);
  CHECK_THROWS_AS(run_check(bad), ConfigError);
  bad = config("der-evidence");
  bad.margin = 1;
  CHECK_THROWS_AS(run_check(bad), ConfigError);
}

TEST_CASE("json output is deterministic and ordered") {
  CheckConfig cfg = config("taft-identity");
  cfg.seed = 42;
  const std::string a = format_report(run_check(cfg), Format::json);
  const std::string b = format_report(run_check(cfg), Format::json);
  CHECK(a == b);
  CHECK(a.rfind("{\"check\":\"taft-identity\",\"status\":\"pass\",", 0) == 0);
  CHECK(a.find("wall_seconds") == std::string::npos);
  cfg.timing = true;
  CHECK(format_report(run_check(cfg), Format::json).find("wall_seconds") != std::string::npos);
}

TEST_CASE("seeded sampling is reproducible and seed dependent") {
  const EsvAlgebra alg;
  std::mt19937_64 a(3), b(3), c(4);
  std::vector<RMatrix> ra, rb, rc;
  for (int i = 0; i < 10; ++i) {
    ra.push_back(random_skew_r(alg, a, 6));
    rb.push_back(random_skew_r(alg, b, 6));
    rc.push_back(random_skew_r(alg, c, 6));
  }
  CHECK(ra == rb);
  CHECK(ra != rc);
  for (const auto& r : ra) {
    CHECK(is_skew(r));
    CHECK(r.size() <= 8);
    for (const auto& [k, v] : r.terms())
      for (const auto& f : k) CHECK(std::abs(f.twice_index) <= 6);
  }
  std::mt19937_64 d(9);
  for (int i = 0; i < 20; ++i) CHECK(random_r(alg, d, 4).size() <= 4);
}

TEST_CASE("evidence report formats") {
  const Report r = run_check(config("der-evidence"));
  const std::string json = format_report(r, Format::json);
  CHECK(json.find("\"status\":\"evidence\"") != std::string::npos);
  CHECK(json.find("\"cocycle_dim\"") != std::string::npos);
  const std::string text = format_report(r, Format::text);
  CHECK(text.find("status: evidence") != std::string::npos);
  CHECK(text.find("witness") == std::string::npos);
}

TEST_CASE("binary exit codes") {
  CHECK(run("--check jacobi --window 4") == 0);
  CHECK(run("--check joint-kernel --window 4") == 0);
  const std::string broken = write_file("broken_cli.lialg", kBrokenJacobi);
  CHECK(run("--algebra " + broken + " --check jacobi --window 4") == 1);
  CHECK(run("--check nope") == 2);
  CHECK(run("") == 2);
  CHECK(run("--check jacobi --window 1 --margin 2") == 2);
  CHECK(run("--check jacobi --format yaml") == 2);
  CHECK(run("--algebra " + scratch("none.lialg").string() + " --check jacobi") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("binary writes identical json to a file") {
  const fs::path a = scratch("a.json"), b = scratch("b.json");
  REQUIRE(run("--check compat --seed 9 --format json --out " + a.string()) == 0);
  REQUIRE(run("--check compat --seed 9 --format json --out " + b.string()) == 0);
  const std::string ja = read_file(a);
  CHECK_FALSE(ja.empty());
  CHECK(ja == read_file(b));
  const Json parsed = Json::parse(ja);
  CHECK(parsed["check"] == "compat");
  CHECK(parsed["config"]["seed"] == 9);
}
