#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sixvertex/suites.hpp"

using namespace sixvertex;
using nlohmann::json;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SIXVERTEX_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

// Recursive key/type skeleton of a JSON document; array elements collapse to
// their first entry so growing a list does not change the schema.
json schema_of(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = schema_of(it.value());
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    if (!j.empty()) out.push_back(schema_of(j.front()));
    return out;
  }
  if (j.is_string()) return "string";
  if (j.is_boolean()) return "bool";
  if (j.is_number()) return "number";
  return "null";
}

}  // namespace

TEST_CASE("smoke: every module suite runs end to end quickly") {
  const auto start = std::chrono::steady_clock::now();
  SuiteConfig cfg;
  cfg.suite = "all";
  cfg.L = 2;
  cfg.M = 1;
  cfg.seeds = {7};
  const SuiteResult result = run_suite(cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(result.report.passed());
  CHECK(secs < 10.0);
}

TEST_CASE("worker-thread count does not change the report") {
  SuiteConfig cfg;
  cfg.suite = "unitarity";
  cfg.L = 2;
  cfg.seeds = {1, 2, 3, 4, 5, 6, 7, 8};
  unsetenv("SIXVERTEX_THREADS");
  json single = suite_document(cfg, run_suite(cfg));
  setenv("SIXVERTEX_THREADS", "4", 1);
  json threaded = suite_document(cfg, run_suite(cfg));
  unsetenv("SIXVERTEX_THREADS");
  single.erase("timings_ms");
  threaded.erase("timings_ms");
  CHECK(single.dump() == threaded.dump());
}

TEST_CASE("matrices export as flat arrays for debugging") {
  MatX m(1, 2);
  m(0, 0) = Complex{1.0, -2.0};
  m(0, 1) = Complex{0.0, 3.0};
  const json j = matrix_to_json(m);
  CHECK(j["rows"] == 1);
  CHECK(j["cols"] == 2);
  CHECK(j["entries"][0][1] == -2.0);
  CHECK(j["entries"][1][1] == 3.0);
}

TEST_CASE("reports are deterministic for a fixed config") {
  SuiteConfig cfg;
  cfg.suite = "dwpf";
  cfg.L = 4;
  cfg.M = 4;
  cfg.seeds = {3, 4};
  json first = suite_document(cfg, run_suite(cfg));
  json second = suite_document(cfg, run_suite(cfg));
  first.erase("timings_ms");
  second.erase("timings_ms");
  if (first.contains("details")) {
    for (auto& e : first["details"]["routes"]) e.erase("timings_ms");
    for (auto& e : second["details"]["routes"]) e.erase("timings_ms");
  }
  CHECK(first.dump() == second.dump());
}

TEST_CASE("report schema matches the committed golden file") {
  SuiteConfig cfg;
  cfg.suite = "dwpf";
  cfg.L = 3;
  cfg.M = 3;
  cfg.seeds = {7};
  const json doc = suite_document(cfg, run_suite(cfg));
  const std::string golden_path = std::string(SIXVERTEX_GOLDEN_DIR) + "/report_schema.json";
  std::ifstream in(golden_path);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", golden_path);
  json golden;
  in >> golden;
  CHECK(schema_of(doc).dump(2) == golden.dump(2));
}

TEST_CASE("single-column suite carries the base-case record") {
  SuiteConfig cfg;
  cfg.suite = "dwpf";
  cfg.L = 1;
  cfg.M = 1;
  cfg.seeds = {5};
  const SuiteResult result = run_suite(cfg);
  bool found = false;
  for (const auto& c : result.report.checks)
    if (c.id == "base-case[B]" && c.pass) found = true;
  CHECK(found);
}

TEST_CASE("factorization suite enumerates all six permutations at three sites") {
  SuiteConfig cfg;
  cfg.suite = "fbasis";
  cfg.L = 3;
  cfg.seeds = {7};
  const SuiteResult result = run_suite(cfg);
  int plain_records = 0;
  for (const auto& c : result.report.checks)
    if (c.id.rfind("factorization[", 0) == 0) ++plain_records;
  CHECK(plain_records == 6);
  CHECK(result.report.passed());
}

TEST_CASE("config validation") {
  SuiteConfig cfg;
  cfg.suite = "nonsense";
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg.suite = "scalar";
  cfg.L = 20;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg.L = 4;
  cfg.M = 7;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
}

TEST_CASE("tolerance overrides reach the checks") {
  SuiteConfig cfg;
  cfg.suite = "unitarity";
  cfg.seeds = {7};
  cfg.tol_overrides["unitarity"] = 1e-30;  // unreachable: everything fails
  const SuiteResult result = run_suite(cfg);
  CHECK_FALSE(result.report.passed());
}

TEST_CASE("process exit codes: pass, check failure, config error") {
  CHECK(run_cli("unitarity --L 2 --seed 7") == 0);
  CHECK(run_cli("unitarity --L 2 --seed 7 --tol unitarity=1e-30") == 1);
  CHECK(run_cli("unitarity --L 99") == 2);
  CHECK(run_cli("no-such-suite") == 2);
}

TEST_CASE("the report file lands where requested") {
  const std::string path = "/tmp/sixvertex_cli_report.json";
  std::remove(path.c_str());
  CHECK(run_cli("dwpf --L 2 --M 2 --seed 9 --out " + path) == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  json doc;
  in >> doc;
  CHECK(doc["pass"].get<bool>());
  CHECK(doc["suite"] == "dwpf");
  std::remove(path.c_str());
}

TEST_CASE("benchmark entries agree tightly at small sizes") {
  SuiteConfig cfg;
  cfg.M = 3;
  cfg.seeds = {5};
  const json doc = run_benchmark(cfg);
  REQUIRE(doc["pass"].get<bool>());
  for (const auto& entry : doc["entries"]) {
    const double spread = std::stod(entry["spread"].get<std::string>());
    if (entry["M"] == 2) CHECK(spread < 1e-12);
    CHECK(spread < 1e-8);
  }
}

TEST_CASE("perturbed weight functions are constructed and break checks") {
  const WeightSet w = weight_family_by_name("field-trig", {2.0, 0.0}, 0);
  CHECK_THROWS_AS(perturb_weight_function(w, "q+", 0.01), ConfigError);
  const WeightSet broken = perturb_weight_function(w, "c+", 0.01);
  SpectralPoint p1{{0.9, 0.1}, {1.0, 0.0}}, p2{{1.2, -0.2}, {1.3, 0.0}};
  CHECK(std::abs(broken.c_plus(p1, p2) - w.c_plus(p1, p2) - 0.01) < 1e-15);
}
