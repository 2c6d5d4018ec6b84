#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string output;
};

// Runs a complete shell command, capturing stdout (callers redirect stderr
// themselves when they want it).
RunResult run_raw(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int raw = pclose(pipe);
  result.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

RunResult run(const std::string& args) {
  return run_raw(std::string("\"") + HBN_CLI_PATH + "\" " + args + " 2>/dev/null");
}

RunResult run_merged(const std::string& args) {
  return run_raw(std::string("\"") + HBN_CLI_PATH + "\" " + args + " 2>&1");
}

size_t line_count(const std::string& text) {
  size_t lines = 0;
  for (char c : text) lines += (c == '\n');
  return lines;
}

}  // namespace

TEST_CASE("classify reports a full decision set as JSON") {
  auto result = run("classify --g 3 --e -2,0,1");
  REQUIRE(result.code == 0);
  json j = json::parse(result.output);
  CHECK(j["input"]["g"] == 3);
  CHECK(j["input"]["e"] == json::array({-2, 0, 1}));
  CHECK(j["invariants"]["degL"] == 4);
  CHECK(j["invariants"]["r"] == 2);
  CHECK(j["decisions"]["bpf"]["case"] == "Bpf.Subbundle");
  CHECK(j["decisions"]["va"]["value"] == true);
  CHECK(j["decisions"]["va"]["case"] == "VA.Case7");
  CHECK(j["decisions"]["rel_pva"].size() == 3);
  CHECK_FALSE(j.contains("warnings"));
}

TEST_CASE("unsorted parts are refused unless --sort is given") {
  auto refused = run("classify --g 4 --e 0,-2,1");
  CHECK(refused.code == 2);
  json j = json::parse(refused.output);
  CHECK(j["error"]["code"] == "unsorted-parts");

  auto sorted = run("classify --g 4 --e 0,-2,1 --sort");
  REQUIRE(sorted.code == 0);
  j = json::parse(sorted.output);
  CHECK(j["input"]["e"] == json::array({-2, 0, 1}));
  CHECK(j["warnings"] == json::array({"parts reordered to nondecreasing"}));
}

TEST_CASE("value-level refusals exit 1 with a structured error") {
  auto empty_locus = run("classify --g 2 --e -2,0,0,0");
  CHECK(empty_locus.code == 1);
  CHECK(json::parse(empty_locus.output)["error"]["code"] == "empty-locus");

  auto rank1 = run("classify --g 0 --e 4");
  CHECK(rank1.code == 1);
  CHECK(json::parse(rank1.output)["error"]["code"] == "rank-too-small");

  auto missing = run("classify --g 3");
  CHECK(missing.code == 2);
  CHECK(json::parse(missing.output)["error"]["code"] == "parse-error");
}

TEST_CASE("count reports both routes' agreed value with its audit trail") {
  auto result = run("count --g 5 --e -3,0,0 --p 1");
  REQUIRE(result.code == 0);
  json j = json::parse(result.output);
  CHECK(j["count"]["N"] == 1);
  CHECK(j["count"]["degZ"] == 14);
  CHECK(j["count"]["degH"] == 6);
  CHECK(j["count"]["degPi"] == 2);
  CHECK(j["count"]["degL"] == 4);
  CHECK(j["count"]["edge_case"] == "Positive");
  CHECK(j["invariants"]["nonneg_parts"] == 2);

  auto precondition = run("count --g 5 --e -3,0,0 --p 0");
  CHECK(precondition.code == 1);
  CHECK(json::parse(precondition.output)["error"]["code"] == "nonneg-parts-precondition");

  auto bad_p = run("count --g 5 --e -3,0,0 --p 9");
  CHECK(bad_p.code == 1);
  CHECK(json::parse(bad_p.output)["error"]["code"] == "bad-ample-degree");

  auto plain = run("count --g 5 --e -3,0,0 --p 1 --format plain");
  REQUIRE(plain.code == 0);
  CHECK(plain.output.find("N = 1") != std::string::npos);
  CHECK(plain.output.find("edge case: Positive") != std::string::npos);
}

TEST_CASE("classify CSV matches the frozen column layout") {
  auto result = run("classify --g 3 --e -2,0,1 --format csv");
  REQUIRE(result.code == 0);
  CHECK(result.output ==
        "g,e1,e2,e3,u,rho,h0,r,degL,bpf,bpf_case,birat_va,va,va_case,"
        "rel_p0,rel_case_p0,birel_p0,N_p0,rel_p1,rel_case_p1,birel_p1,N_p1,"
        "rel_p2,rel_case_p2,birel_p2,N_p2\n"
        "3,-2,0,1,3,0,3,2,4,true,Bpf.Subbundle,true,true,VA.Case7,"
        "true,RelVA.Case1,true,NA,true,RelVA.Case3,true,0,false,None,false,NA\n");
}

TEST_CASE("enum lists types in order with degree filter and limit") {
  auto filtered = run("enum --k 2 --emin -1 --emax 2 --deg 1 --format csv");
  REQUIRE(filtered.code == 0);
  CHECK(filtered.output == "-1,2\n0,1\n");

  auto limited = run("enum --k 3 --emin -1 --emax 1 --limit 4 --format json");
  REQUIRE(limited.code == 0);
  CHECK(line_count(limited.output) == 4);
  CHECK(limited.output.rfind("[-1,-1,-1]\n", 0) == 0);

  auto bad = run("enum --k 0 --emin 0 --emax 1");
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.output)["error"]["code"] == "domain-violation");
}

TEST_CASE("table streams a header plus one row per datum") {
  auto result = run("table --kmin 2 --kmax 2 --emin -1 --emax 1 --gslack 0 --format csv");
  REQUIRE(result.code == 0);
  CHECK(line_count(result.output) == 7);  // header + 6 types at their rigidity genus
  CHECK(result.output.rfind("g,e1,e2,u,rho", 0) == 0);

  auto limited = run("table --kmin 2 --kmax 2 --emin -1 --emax 1 --gslack 0 --limit 3 --format csv");
  REQUIRE(limited.code == 0);
  CHECK(line_count(limited.output) == 4);  // the header does not count against --limit

  auto spot = run("table --kmin 3 --kmax 3 --emin -2 --emax 1 --gslack 0 --format csv");
  REQUIRE(spot.code == 0);
  CHECK(spot.output.find("3,-2,0,1,3,0,3,2,4,true,Bpf.Subbundle,true,true,VA.Case7") !=
        std::string::npos);
}

TEST_CASE("verify passes on a healthy domain and fails under fault injection") {
  auto healthy = run("verify --kmax 3 --emin -2 --emax 2 --gslack 1");
  REQUIRE(healthy.code == 0);
  json j = json::parse(healthy.output);
  CHECK(j["ok"] == true);
  CHECK(j["mutation"].is_null());
  CHECK(j["violations"] == json::array());

  auto broken = run("verify --kmax 3 --emin -2 --emax 2 --gslack 1 --mutate shift-binom-2");
  CHECK(broken.code == 1);
  j = json::parse(broken.output);
  CHECK(j["ok"] == false);
  CHECK(j["mutation"] == "shift-binom-2");
  REQUIRE(j["violations"].size() > 0);
  CHECK(broken.output.find("count-oracle-identity") != std::string::npos);

  auto unknown = run("verify --kmax 2 --emin -1 --emax 1 --gslack 0 --props bogus");
  CHECK(unknown.code == 2);
  CHECK(json::parse(unknown.output)["error"]["code"] == "parse-error");

  auto selected =
      run("verify --kmax 2 --emin -1 --emax 1 --gslack 0 --props count-oracle-identity");
  CHECK(selected.code == 0);
  CHECK(json::parse(selected.output)["properties"] == json::array({"count-oracle-identity"}));
}

TEST_CASE("HBN_JOBS caps the verifier's parallelism") {
  auto capped = run_raw(std::string("HBN_JOBS=2 \"") + HBN_CLI_PATH +
                        "\" verify --kmax 2 --emin -1 --emax 1 --gslack 1 2>/dev/null");
  CHECK(capped.code == 0);
  CHECK(json::parse(capped.output)["ok"] == true);

  auto invalid = run_raw(std::string("HBN_JOBS=abc \"") + HBN_CLI_PATH +
                         "\" verify --kmax 2 --emin -1 --emax 1 --gslack 0 2>&1");
  CHECK(invalid.code == 0);
  CHECK(invalid.output.find("ignoring invalid HBN_JOBS") != std::string::npos);
}

TEST_CASE("malformed invocations exit 2") {
  auto bare = run("");
  CHECK(bare.code == 2);

  auto unknown_format = run_merged("classify --g 3 --e -2,0,1 --format yaml");
  CHECK(unknown_format.code == 2);
  CHECK(unknown_format.output.find("parse-error") != std::string::npos);

  auto negative_genus = run("classify --g -1 --e 0,0");
  CHECK(negative_genus.code == 2);
  CHECK(json::parse(negative_genus.output)["error"]["code"] == "negative-genus");
}
