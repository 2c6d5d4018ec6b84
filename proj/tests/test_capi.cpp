#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include <hbn/hbn.h>

using nlohmann::json;

namespace {

// Adopts a library-owned string.
std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string out(text);
  hbn_string_free(text);
  return out;
}

struct DatumHandle {
  hbn_datum* ptr = nullptr;
  DatumHandle(const char* g, const char* parts, int sort = 0) {
    REQUIRE(hbn_datum_create(g, parts, sort, &ptr) == HBN_OK);
  }
  ~DatumHandle() { hbn_datum_destroy(ptr); }
  DatumHandle(const DatumHandle&) = delete;
  DatumHandle& operator=(const DatumHandle&) = delete;
};

std::string invariant(const hbn_datum* d, hbn_invariant which) {
  char* out = nullptr;
  REQUIRE(hbn_datum_invariant(d, which, &out) == HBN_OK);
  return take(out);
}

}  // namespace

TEST_CASE("library identity and status names") {
  CHECK(std::string(hbn_version()) == "1.0.0");
  CHECK(std::string(hbn_status_name(HBN_OK)) == "ok");
  CHECK(std::string(hbn_status_name(HBN_END)) == "end-of-stream");
  CHECK(std::string(hbn_status_name(HBN_ERR_UNSORTED_PARTS)) == "unsorted-parts");
  CHECK(std::string(hbn_status_name(HBN_ERR_VIOLATIONS)) == "violations-found");
}

TEST_CASE("datum lifecycle and invariants") {
  DatumHandle d("3", "-2,0,1");
  CHECK(hbn_datum_rank(d.ptr) == 3);
  CHECK(hbn_datum_was_reordered(d.ptr) == 0);
  CHECK(invariant(d.ptr, HBN_INV_GENUS) == "3");
  CHECK(invariant(d.ptr, HBN_INV_RANK) == "3");
  CHECK(invariant(d.ptr, HBN_INV_DEG_E) == "-1");
  CHECK(invariant(d.ptr, HBN_INV_U) == "3");
  CHECK(invariant(d.ptr, HBN_INV_RHO) == "0");
  CHECK(invariant(d.ptr, HBN_INV_H0) == "3");
  CHECK(invariant(d.ptr, HBN_INV_R) == "2");
  CHECK(invariant(d.ptr, HBN_INV_DEG_L) == "4");
  CHECK(invariant(d.ptr, HBN_INV_NONNEG_PARTS) == "2");
}

TEST_CASE("datum creation maps each refusal to its status") {
  hbn_datum* out = nullptr;
  CHECK(hbn_datum_create("4", "0,-2,1", 0, &out) == HBN_ERR_UNSORTED_PARTS);
  CHECK(out == nullptr);
  CHECK(std::string(hbn_last_error_message()).find("sort") != std::string::npos);

  REQUIRE(hbn_datum_create("4", "0,-2,1", 1, &out) == HBN_OK);
  CHECK(hbn_datum_was_reordered(out) == 1);
  CHECK(hbn_datum_rank(out) == 3);
  hbn_datum_destroy(out);
  out = nullptr;

  CHECK(hbn_datum_create("-1", "0,0", 0, &out) == HBN_ERR_NEGATIVE_GENUS);
  CHECK(hbn_datum_create("2", "-2,0,0,0", 0, &out) == HBN_ERR_EMPTY_LOCUS);
  CHECK(hbn_datum_create("1", "", 0, &out) == HBN_ERR_EMPTY_TYPE);
  CHECK(hbn_datum_create("1", "1,x", 0, &out) == HBN_ERR_PARSE);
  CHECK(hbn_datum_create("x", "0,0", 0, &out) == HBN_ERR_PARSE);
  CHECK(hbn_datum_create(nullptr, "0,0", 0, &out) == HBN_ERR_NULL_ARGUMENT);
  CHECK(hbn_datum_create("1", "0,0", 0, nullptr) == HBN_ERR_NULL_ARGUMENT);
}

TEST_CASE("twisted sections, twisting, and profile recovery through the boundary") {
  char* out = nullptr;
  REQUIRE(hbn_h0_twisted("-2,0,1", "10", &out) == HBN_OK);
  CHECK(take(out) == "32");
  REQUIRE(hbn_h0_twisted("-2,0,1", "0", &out) == HBN_OK);
  CHECK(take(out) == "3");
  REQUIRE(hbn_twist("-2,0,1", "2", &out) == HBN_OK);
  CHECK(take(out) == "0,2,3");
  REQUIRE(hbn_type_from_h0_profile("-3:0,-2:0,-1:1,0:3,1:5,2:8", &out) == HBN_OK);
  CHECK(take(out) == "-2,0,1");

  CHECK(hbn_type_from_h0_profile("0:1,1:2", &out) == HBN_ERR_INCONSISTENT_PROFILE);
  CHECK(hbn_type_from_h0_profile("0-1", &out) == HBN_ERR_PARSE);
  CHECK(hbn_h0_twisted(nullptr, "0", &out) == HBN_ERR_NULL_ARGUMENT);
}

TEST_CASE("decision calls surface verdict, case number, and label") {
  DatumHandle plane("3", "-2,0,1");
  hbn_decision decision;
  REQUIRE(hbn_very_ample(plane.ptr, &decision) == HBN_OK);
  CHECK(decision.value == 1);
  CHECK(decision.case_number == 7);
  CHECK(std::string(decision.case_label) == "VA.Case7");

  DatumHandle pull("5", "-2,-1,2");
  char* twist = nullptr;
  REQUIRE(hbn_basepoint_free(pull.ptr, &decision, &twist) == HBN_OK);
  CHECK(decision.value == 1);
  CHECK(std::string(decision.case_label) == "Bpf.Pullback");
  CHECK(take(twist) == "2");

  DatumHandle sub("7", "-1,-1,0,0");
  twist = nullptr;
  REQUIRE(hbn_basepoint_free(sub.ptr, &decision, &twist) == HBN_OK);
  CHECK(std::string(decision.case_label) == "Bpf.Subbundle");
  CHECK(twist == nullptr);

  DatumHandle rigid("2", "-2,0,0");
  REQUIRE(hbn_rel_pva(rigid.ptr, 1, &decision) == HBN_OK);
  CHECK(decision.case_number == 3);
  CHECK(std::string(decision.case_label) == "RelVA.Case3");

  DatumHandle sparse("5", "-3,0,0");
  REQUIRE(hbn_birationally_rel_pva(sparse.ptr, 2, &decision) == HBN_OK);
  CHECK(decision.value == 0);
  CHECK(decision.case_number == 0);
  CHECK(std::string(decision.case_label) == "None");
  CHECK(hbn_rel_pva(sparse.ptr, 5, &decision) == HBN_ERR_BAD_AMPLE_DEGREE);

  DatumHandle line("0", "4");
  CHECK(hbn_very_ample(line.ptr, &decision) == HBN_ERR_RANK_TOO_SMALL);
  CHECK(std::string(hbn_last_error_message()).find("k >= 2") != std::string::npos);
}

TEST_CASE("chain and conjecture predicates") {
  DatumHandle chain("0", "0,1,1");
  int holds = -1;
  REQUIRE(hbn_pva_sufficient(chain.ptr, 1, 0, &holds) == HBN_OK);
  CHECK(holds == 1);
  REQUIRE(hbn_pva_sufficient(chain.ptr, 1, 1, &holds) == HBN_OK);
  CHECK(holds == 1);

  DatumHandle narrow("1", "-1,0,1");
  REQUIRE(hbn_pva_sufficient(narrow.ptr, 1, 0, &holds) == HBN_OK);
  CHECK(holds == 0);

  DatumHandle wide("0", "0,0,0,0");
  REQUIRE(hbn_conjectured_pva(wide.ptr, 1, &holds) == HBN_OK);
  CHECK(holds == 1);
}

TEST_CASE("classical series queries") {
  int value = -1;
  REQUIRE(hbn_classical_va("3", "2", "4", &value) == HBN_OK);
  CHECK(value == 1);
  REQUIRE(hbn_classical_va("2", "1", "3", &value) == HBN_OK);
  CHECK(value == 0);
  CHECK(hbn_classical_va("3", "1", "2", &value) == HBN_ERR_EMPTY_LOCUS);
  CHECK(hbn_classical_va("-1", "1", "1", &value) == HBN_ERR_DOMAIN);

  char* rho = nullptr;
  REQUIRE(hbn_classical_rho("5", "3", "8", &rho) == HBN_OK);
  CHECK(take(rho) == "5");
}

TEST_CASE("dependent divisor counts through the boundary") {
  DatumHandle d("5", "-3,0,0");
  hbn_count count;
  REQUIRE(hbn_dependent_divisor_count(d.ptr, 1, &count) == HBN_OK);
  CHECK(std::string(count.n) == "1");
  CHECK(std::string(count.deg_z) == "14");
  CHECK(std::string(count.deg_h) == "6");
  CHECK(std::string(count.deg_pi) == "2");
  CHECK(std::string(count.deg_l) == "4");
  CHECK(std::string(count.edge_case) == "Positive");
  hbn_count_clear(&count);
  CHECK(count.n == nullptr);

  CHECK(hbn_dependent_divisor_count(d.ptr, 0, &count) == HBN_ERR_NONNEG_PARTS);

  char* out = nullptr;
  REQUIRE(hbn_directrix_intersection("4", "2", &out) == HBN_OK);
  CHECK(take(out) == "3");
}

TEST_CASE("rendered reports match the library verdicts") {
  DatumHandle d("3", "-2,0,1");
  char* out = nullptr;
  REQUIRE(hbn_classify_report(d.ptr, nullptr, 0, HBN_FORMAT_JSON, &out) == HBN_OK);
  json j = json::parse(take(out));
  CHECK(j["decisions"]["va"]["case"] == "VA.Case7");
  CHECK(j["decisions"]["rel_pva"].size() == 3);
  CHECK(j["invariants"]["degL"] == 4);

  int ps[] = {1};
  REQUIRE(hbn_classify_report(d.ptr, ps, 1, HBN_FORMAT_JSON, &out) == HBN_OK);
  j = json::parse(take(out));
  CHECK(j["decisions"]["rel_pva"].size() == 1);
  CHECK(j["decisions"]["counts"].size() == 1);
  CHECK(j["decisions"]["counts"][0]["N"] == 0);

  DatumHandle c("5", "-3,0,0");
  REQUIRE(hbn_count_report(c.ptr, 1, HBN_FORMAT_JSON, &out) == HBN_OK);
  j = json::parse(take(out));
  CHECK(j["count"]["N"] == 1);
  CHECK(j["count"]["edge_case"] == "Positive");
}

TEST_CASE("type streams walk the enumeration and signal their end") {
  hbn_type_stream* stream = nullptr;
  REQUIRE(hbn_type_stream_create(2, -1, 2, "1", &stream) == HBN_OK);
  char* line = nullptr;
  REQUIRE(hbn_type_stream_next(stream, HBN_FORMAT_CSV, &line) == HBN_OK);
  CHECK(take(line) == "-1,2\n");
  REQUIRE(hbn_type_stream_next(stream, HBN_FORMAT_CSV, &line) == HBN_OK);
  CHECK(take(line) == "0,1\n");
  CHECK(hbn_type_stream_next(stream, HBN_FORMAT_CSV, &line) == HBN_END);
  CHECK(line == nullptr);
  hbn_type_stream_destroy(stream);

  REQUIRE(hbn_type_stream_create(3, -1, 1, nullptr, &stream) == HBN_OK);
  REQUIRE(hbn_type_stream_next(stream, HBN_FORMAT_JSON, &line) == HBN_OK);
  CHECK(take(line) == "[-1,-1,-1]\n");
  hbn_type_stream_destroy(stream);

  CHECK(hbn_type_stream_create(0, -1, 1, nullptr, &stream) == HBN_ERR_DOMAIN);
}

TEST_CASE("table streams emit a CSV header and then one row per datum") {
  hbn_domain domain{2, 2, -1, 1, 0, nullptr, 0};
  hbn_table_stream* stream = nullptr;
  REQUIRE(hbn_table_stream_create(&domain, HBN_FORMAT_CSV, &stream) == HBN_OK);
  char* line = nullptr;
  REQUIRE(hbn_table_stream_next(stream, &line) == HBN_OK);
  std::string header = take(line);
  CHECK(header.rfind("g,e1,e2,u,rho", 0) == 0);
  int rows = 0;
  while (hbn_table_stream_next(stream, &line) == HBN_OK) {
    take(line);
    ++rows;
  }
  CHECK(rows == 6);
  hbn_table_stream_destroy(stream);

  REQUIRE(hbn_table_stream_create(&domain, HBN_FORMAT_JSON, &stream) == HBN_OK);
  REQUIRE(hbn_table_stream_next(stream, &line) == HBN_OK);
  json j = json::parse(take(line));
  CHECK(j["input"]["e"] == json::array({-1, -1}));
  hbn_table_stream_destroy(stream);

  CHECK(hbn_table_stream_create(&domain, HBN_FORMAT_PLAIN, &stream) == HBN_ERR_PARSE);
}

TEST_CASE("verification sweeps return structured reports and statuses") {
  hbn_verify_options options{{2, 2, -1, 1, 1, nullptr, 0}, nullptr, nullptr, 2};
  char* report = nullptr;
  long violations = -1;
  REQUIRE(hbn_verify(&options, HBN_FORMAT_JSON, &report, &violations) == HBN_OK);
  json j = json::parse(take(report));
  CHECK(j["ok"] == true);
  CHECK(violations == 0);

  options.mutation = "shift-binom-1";
  REQUIRE(hbn_verify(&options, HBN_FORMAT_JSON, &report, &violations) == HBN_ERR_VIOLATIONS);
  j = json::parse(take(report));
  CHECK(j["ok"] == false);
  CHECK(j["mutation"] == "shift-binom-1");
  CHECK(violations > 0);

  options.mutation = "bogus";
  CHECK(hbn_verify(&options, HBN_FORMAT_JSON, &report, &violations) == HBN_ERR_PARSE);

  options.mutation = nullptr;
  options.properties = "u-twist-invariant,count-oracle-identity";
  REQUIRE(hbn_verify(&options, HBN_FORMAT_JSON, &report, &violations) == HBN_OK);
  j = json::parse(take(report));
  CHECK(j["properties"] == json::array({"u-twist-invariant", "count-oracle-identity"}));

  options.properties = "no-such-property";
  CHECK(hbn_verify(&options, HBN_FORMAT_JSON, &report, &violations) == HBN_ERR_PARSE);
}

TEST_CASE("the library lists its property ids and fault injections") {
  std::string properties = take(hbn_known_properties());
  CHECK(properties.find("count-oracle-identity") != std::string::npos);
  CHECK(properties.find("u-twist-invariant") != std::string::npos);

  std::string mutations = take(hbn_known_mutations());
  CHECK(mutations == "shift-binom-1,shift-binom-2,shift-binom-3,flip-sign-2,flip-sign-3");
}
