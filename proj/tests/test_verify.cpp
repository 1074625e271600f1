#include <doctest.h>

#include "engelkit/corpus.hpp"
#include "engelkit/verify.hpp"

using namespace engelkit;

namespace {

// a fast sub-corpus covering nilpotent, height-2, height-3, non-solvable,
// and Frobenius shapes
std::vector<Group> mini_corpus() {
  std::vector<Group> out;
  for (const char* n :
       {"cyclic(12)", "dihedral(4)", "symmetric(3)", "symmetric(4)",
        "alternating(4)", "alternating(5)", "frobenius(7,3)", "quaternion8",
        "direct_product(symmetric(3),cyclic(2))"})
    out.push_back(builtin(n));
  return out;
}

const AnalyzedCorpus& mini_analyzed() {
  static AnalyzedCorpus a = analyze_corpus(mini_corpus(), {});
  return a;
}

const CaseResult& find_case(const SuiteResult& s, std::string_view group) {
  for (const CaseResult& c : s.cases)
    if (c.group == group) return c;
  REQUIRE(false);
  return s.cases.front();
}

} // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("group analysis fields") {
  VerifyOptions opts;
  GroupAnalysis a = analyze_group(builtin("symmetric(4)"), opts);
  CHECK(a.profile.records.size() == 24);
  CHECK(a.fitting_subgroup.order() == 4);
  CHECK(a.gamma_inf.order() == 12);
  CHECK(a.height == 3);
  CHECK(a.solvable);
  CHECK(!a.nilpotent);
  CHECK(a.quotient_exponent == 6);
  CHECK(a.group_exponent == 12);
  REQUIRE(a.nontrivial_p_cores.size() == 1);
  CHECK(a.nontrivial_p_cores[0].first == 2);
  CHECK(a.nontrivial_p_cores[0].second.order() == 4);
  CHECK(!a.sampled_normals.empty());
  CHECK(a.sampled_normals.size() <= 25);
  for (const Subgroup& n : a.sampled_normals) {
    CHECK(!n.is_trivial());
    CHECK(is_normal(a.group, n));
  }
}

TEST_CASE("all suites pass on the mini corpus") {
  VerifyOptions opts;
  const AnalyzedCorpus& a = mini_analyzed();
  for (const std::string& name : all_suite_names()) {
    VerificationReport r = run_suites(mini_corpus(), {name}, opts);
    REQUIRE(r.suites.size() == 1);
    INFO("suite ", name);
    CHECK(r.suites[0].failed() == 0);
  }
  (void)a;
}

TEST_CASE("baer_zorn counts evaluations") {
  SuiteResult s = suite_baer_zorn(mini_analyzed(), {});
  CHECK(s.failed() == 0);
  CHECK(s.skipped() == 0);
  const CaseResult& c = find_case(s, "S3");
  CHECK(c.detail.find("12 evaluations") != std::string::npos);
  CHECK(c.detail.find("m=3") != std::string::npos);
}

TEST_CASE("residual suite checks coprime generation and quotients") {
  SuiteResult s = suite_residual(mini_analyzed(), {});
  CHECK(s.failed() == 0);
  const CaseResult& c = find_case(s, "S3");
  CHECK(c.detail.find("residual order 3") != std::string::npos);
}

TEST_CASE("height2 suite skips exactly the out-of-scope groups") {
  SuiteResult s = suite_height2_residual(mini_analyzed(), {});
  CHECK(s.failed() == 0);
  CHECK(find_case(s, "A5").status == Status::SKIP);
  CHECK(find_case(s, "A5").detail.find("non-solvable") != std::string::npos);
  CHECK(find_case(s, "S4").status == Status::SKIP); // height 3
  CHECK(find_case(s, "A4").status == Status::PASS);
  CHECK(find_case(s, "F7:3").status == Status::PASS);
  CHECK(find_case(s, "C12").status == Status::PASS);
  CHECK(find_case(s, "F7:3").detail.find("agrees") != std::string::npos);
}

TEST_CASE("action bound suite records triples") {
  SuiteResult s = suite_action_bound(mini_analyzed(), {});
  CHECK(s.failed() == 0);
  bool found_a4 = false;
  for (const CaseResult& c : s.cases)
    if (c.group == "A4 q=2") {
      found_a4 = true;
      CHECK(c.status == Status::PASS);
      CHECK(c.detail.find("(4, 4, 3)") != std::string::npos);
    }
  CHECK(found_a4);
  CHECK(s.cases.back().group == "(instances)");
  CHECK(s.cases.back().detail.find("envelope") != std::string::npos);
}

TEST_CASE("hall_nilpotency instances") {
  SuiteResult s = suite_hall_nilpotency(mini_analyzed(), {});
  CHECK(s.failed() == 0);
  CHECK(s.cases.size() >= 5);
  const CaseResult& s4 = find_case(s, "S4 B=F(A) d=2");
  CHECK(s4.detail.find("class(C)=0") != std::string::npos);
  CHECK(s4.detail.find("[A:C]=24") != std::string::npos);
  const CaseResult& prod = find_case(s, "D8xS3 B=F(A) d=2");
  CHECK(prod.detail.find("c=2") != std::string::npos);
}

TEST_CASE("class bound formula") {
  CHECK(centralizer_class_bound(1, 1) == 1);
  CHECK(centralizer_class_bound(1, 2) == 2);
  CHECK(centralizer_class_bound(1, 3) == 3);
  CHECK(centralizer_class_bound(2, 2) == 5);
  CHECK(centralizer_class_bound(2, 1) == 2);
  CHECK(centralizer_class_bound(3, 2) == 9);
  // the three chain steps: gamma_{d+1}(C) <= gamma_2(B),
  // gamma_{3d}(C) <= gamma_3(B), gamma_{6d-2}(C) <= gamma_4(B)
  for (unsigned d = 1; d <= 4; ++d) {
    CHECK(centralizer_class_bound(1, d) + 1 == d + 1);
    CHECK(centralizer_class_bound(2, d) + 1 == 3 * d);
    CHECK(centralizer_class_bound(3, d) + 1 == 6 * d - 2);
  }
}

TEST_CASE("bound table rows") {
  auto rows = bound_table(mini_analyzed());
  REQUIRE(rows.size() == mini_corpus().size());
  const BoundTableRow* s3 = nullptr;
  const BoundTableRow* c12 = nullptr;
  const BoundTableRow* a5 = nullptr;
  for (const auto& r : rows) {
    if (r.group == "S3") s3 = &r;
    if (r.group == "C12") c12 = &r;
    if (r.group == "A5") a5 = &r;
  }
  REQUIRE(s3);
  CHECK(s3->order == 6);
  CHECK(s3->m == 3);
  CHECK(s3->gamma_inf == 3);
  CHECK(s3->fitting_index == 2);
  CHECK(s3->quotient_exponent == 2);
  CHECK(s3->fitting_height == 2);
  CHECK(!s3->nilpotent);
  REQUIRE(c12);
  CHECK(c12->m == 1);
  CHECK(c12->gamma_inf == 1);
  CHECK(c12->fitting_index == 1);
  CHECK(c12->quotient_exponent == 1);
  CHECK(c12->fitting_height == 1);
  CHECK(c12->nilpotent);
  REQUIRE(a5);
  CHECK(!a5->fitting_height.has_value());
}

TEST_CASE("csv serialization") {
  auto rows = bound_table(mini_analyzed());
  std::string csv = to_csv(rows);
  CHECK(csv.find("group,order,m,gamma_inf,fitting_index,quotient_exponent,"
                 "fitting_height,nilpotent\n") == 0);
  CHECK(csv.find("S3,6,3,3,2,2,2,false\n") != std::string::npos);
  CHECK(csv.find("C12,12,1,1,1,1,1,true\n") != std::string::npos);
  CHECK(csv.find("NONE") != std::string::npos); // A5 row
  // RFC-4180-ish sanity: every row has the same field count, no quotes
  std::size_t lines = 0, pos = 0;
  while (pos < csv.size()) {
    std::size_t eol = csv.find('\n', pos);
    std::string_view line(csv.data() + pos, eol - pos);
    CHECK(std::count(line.begin(), line.end(), ',') == 7);
    CHECK(line.find('"') == std::string_view::npos);
    ++lines;
    pos = eol + 1;
  }
  CHECK(lines == rows.size() + 1);
}

TEST_CASE("json report shape and determinism") {
  VerifyOptions opts;
  opts.seed = 7;
  std::vector<Group> corpus = mini_corpus();
  VerificationReport r1 = run_suites(corpus, {"baer_zorn", "residual"}, opts);
  VerificationReport r2 = run_suites(corpus, {"residual", "baer_zorn"}, opts);
  CHECK(to_json(r1) == to_json(r2)); // canonical suite order
  std::string j = to_json(r1);
  CHECK(j.find("\"tool_version\"") != std::string::npos);
  CHECK(j.find("\"seed\": 7") != std::string::npos);
  CHECK(j.find("\"corpus\"") != std::string::npos);
  CHECK(j.find("\"baer_zorn\"") != std::string::npos);

  VerifyOptions par = opts;
  par.jobs = 4;
  VerificationReport r3 = run_suites(corpus, {"baer_zorn", "residual"}, par);
  CHECK(to_json(r3) == to_json(r1));
}

TEST_CASE("suite name resolution") {
  CHECK(resolve_suites({"all"}) == all_suite_names());
  CHECK(resolve_suites({"baer", "zorn"}) ==
        std::vector<std::string>{"baer_zorn"});
  CHECK(resolve_suites({"residual", "baer_zorn"}) ==
        std::vector<std::string>{"baer_zorn", "residual"});
  CHECK_THROWS_AS(resolve_suites({"nosuch"}), Error);
}

TEST_SUITE_END();
