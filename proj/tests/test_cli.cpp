#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "qrs/families.hpp"
#include "qrs/report_json.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args,
                  const std::string& env_prefix = "env -u QRS_ORDER") {
  const char* bin = std::getenv("QRS_CLI_BIN");
  if (!bin) throw std::runtime_error("QRS_CLI_BIN is not set");
  std::string cmd = env_prefix + " \"" + bin + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CliResult result;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("table prints graded polynomials") {
  CliResult r = run_cli("table --family rogers_szego --degree 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 + (1+q)x + x^2\n");

  CliResult r0 = run_cli("table --family rogers_szego --degree 0");
  CHECK(r0.exit_code == 0);
  CHECK(r0.output == "1\n");

  CliResult rl = run_cli("table --family rogers_szego --degree 2 --format latex");
  CHECK(rl.exit_code == 0);
  CHECK(rl.output == "1 + (1+q)x + x^{2}\n");
}

TEST_CASE("table json carries the canonical polynomial string") {
  CliResult r = run_cli("table --family generalized_rs --degree 2 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["family"] == "generalized_rs");
  CHECK(j["degree"] == 2);
  qrs::PolySpec spec;
  spec.family = qrs::FamilyTag::generalized_rs;
  spec.degree = 2;
  CHECK(j["polynomial"] == qrs::build_polynomial(spec).str());
}

TEST_CASE("table rejects unknown families") {
  CliResult r = run_cli("table --family no_such --degree 1");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "error:"));
}

TEST_CASE("verify uses the default order and reports text fields") {
  CliResult r = run_cli("verify --id s1-poch-quotient --n 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "id: s1-poch-quotient\n"));
  CHECK(contains(r.output, "status: pass\n"));
  CHECK(contains(r.output, "order: 8\n"));
  CHECK(contains(r.output, "meta: n=2\n"));
  CHECK(contains(r.output, "first_mismatch: none\n"));
}

TEST_CASE("order resolution prefers the flag over the environment") {
  CliResult env_only =
      run_cli("verify --id s1-poch-quotient --n 1", "env QRS_ORDER=4");
  CHECK(env_only.exit_code == 0);
  CHECK(contains(env_only.output, "order: 4\n"));

  CliResult both = run_cli("verify --id s1-poch-quotient --n 1 --order 3",
                           "env QRS_ORDER=4");
  CHECK(both.exit_code == 0);
  CHECK(contains(both.output, "order: 3\n"));

  CliResult bad_env =
      run_cli("verify --id s1-poch-quotient --n 1", "env QRS_ORDER=abc");
  CHECK(bad_env.exit_code == 2);
  CHECK(contains(bad_env.output, "QRS_ORDER must be a positive integer"));

  CliResult zero_env =
      run_cli("verify --id s1-poch-quotient --n 1", "env QRS_ORDER=0");
  CHECK(zero_env.exit_code == 2);

  CliResult zero_flag = run_cli("verify --id s1-poch-quotient --n 1 --order 0");
  CHECK(zero_flag.exit_code == 2);
  CHECK(contains(zero_flag.output, "--order must be at least 1"));
}

TEST_CASE("verify usage errors exit with 2") {
  CliResult unknown = run_cli("verify --id no-such-identity --order 3");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.output, "unknown identity id"));

  CliResult extra_meta =
      run_cli("verify --id s1-qbinomial-theorem --n 1 --order 3");
  CHECK(extra_meta.exit_code == 2);
  CHECK(contains(extra_meta.output,
                 "does not take meta parameter 'n'"));

  CliResult no_id = run_cli("verify --order 3");
  CHECK(no_id.exit_code == 2);

  CliResult no_cmd = run_cli("");
  CHECK(no_cmd.exit_code == 2);

  CliResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
}

TEST_CASE("an expected mismatch still exits 0 and prints the difference") {
  CliResult r = run_cli("verify --id s1-leibniz --n 2 --order 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "status: mismatch\n"));
  CHECK(contains(r.output, "first_mismatch:\n"));
  CHECK(contains(r.output, "  degree: 0\n"));
  CHECK(contains(r.output, "  diff: "));
}

TEST_CASE("verify json output reserializes byte-identically") {
  CliResult r = run_cli("verify --id s1-leibniz --n 2 --order 3 --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(qrs::json_reserialize(r.output) + "\n" == r.output);

  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["id"] == "s1-leibniz");
  CHECK(j["status"] == "mismatch");
  CHECK(j["order"] == 3);
  CHECK(j["meta"]["n"] == 2);
  CHECK(j["first_mismatch"]["degree"] == 0);
  CHECK_FALSE(j.contains("reason"));

  CliResult theta =
      run_cli("verify --id s3-theta-minus --n 1 --order 3 --format json");
  REQUIRE(theta.exit_code == 0);
  CHECK(qrs::json_reserialize(theta.output) + "\n" == theta.output);
  nlohmann::json tj = nlohmann::json::parse(theta.output);
  CHECK(tj["status"] == "unsupported");
  CHECK(tj["reason"] == "RHS notation undefined in paper");
  CHECK(tj["first_mismatch"].is_null());
}

TEST_CASE("expand prints the left-hand series") {
  CliResult r = run_cli("expand --id s3-theta-minus --n 1 --order 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "+ O(y^4)"));

  CliResult j = run_cli("expand --id s3-theta-minus --n 1 --order 3 --format json");
  REQUIRE(j.exit_code == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.output);
  CHECK(parsed["id"] == "s3-theta-minus");
  CHECK(parsed["var"] == "y");
  CHECK(parsed["order"] == 3);
  CHECK(parsed["coefficients"].size() == 4);
  CHECK(parsed["coefficients"][0] == "1");

  CliResult grid = run_cli("expand --id s4-rogers --order 3");
  CHECK(grid.exit_code == 2);
  CHECK(contains(grid.output, "bidegree grid"));
}

TEST_CASE("sweep over one identity honors the default meta ranges") {
  CliResult r = run_cli("sweep --id s1-poch-quotient --order 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "all statuses expected (4 reports)"));
  for (int n = 0; n <= 3; ++n) {
    CHECK(contains(r.output,
                   "ok         s1-poch-quotient n=" + std::to_string(n)));
  }

  CliResult narrowed = run_cli("sweep --id s1-poch-quotient --order 3 --n 2");
  CHECK(narrowed.exit_code == 0);
  CHECK(contains(narrowed.output, "all statuses expected (1 reports)"));
}

TEST_CASE("sweep reports lhs-only records with their reason") {
  CliResult r = run_cli("sweep --id s3-theta-minus --order 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "all statuses expected (3 reports)"));
  CHECK(contains(r.output,
                 "unsupported (RHS notation undefined in paper)"));
}

TEST_CASE("sweep json parses and reserializes byte-identically") {
  CliResult r = run_cli("sweep --id s1-poch-quotient --order 3 --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(qrs::json_reserialize(r.output) + "\n" == r.output);
  nlohmann::json j = nlohmann::json::parse(r.output);
  REQUIRE(j.is_array());
  CHECK(j.size() == 4);
  for (const auto& rep : j) CHECK(rep["status"] == "pass");
}

TEST_CASE("list catalogs every identity") {
  CliResult text = run_cli("list");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.output, "s1-qbinomial-theorem\n"));
  CHECK(contains(text.output, "expected: known_discrepancy"));
  CHECK(contains(text.output, "expected: lhs_only"));

  CliResult js = run_cli("list --format json");
  REQUIRE(js.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(js.output);
  REQUIRE(j.is_array());
  CHECK(j.size() == 57);
  bool saw_mehler = false;
  bool saw_phi_gf = false;
  for (const auto& rec : j) {
    CHECK_FALSE(rec["id"].get<std::string>().empty());
    CHECK_FALSE(rec["description"].get<std::string>().empty());
    if (rec["id"] == "s4-mehler") {
      saw_mehler = true;
      CHECK(rec["meta"]["m"] == nlohmann::json::array({1, 2}));
      CHECK(rec["meta"]["n"] == nlohmann::json::array({1, 2}));
    }
    if (rec["id"] == "fam-general-phi-gf") {
      saw_phi_gf = true;
      CHECK(rec["meta"].empty());
      CHECK(rec["expected"] == "known_discrepancy");
    }
  }
  CHECK(saw_mehler);
  CHECK(saw_phi_gf);
}

TEST_CASE("--out writes the same bytes the terminal would see") {
  std::string path = "/tmp/qrs_cli_out_test.json";
  std::remove(path.c_str());
  CliResult direct = run_cli("list --format json");
  CliResult filed = run_cli("list --format json --out " + path);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.output.empty());
  CHECK(read_file(path) == direct.output);
  std::remove(path.c_str());

  CliResult bad = run_cli("list --format json --out /no/such/dir/file.json");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.output, "cannot open output path"));
}
