// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "capmatch/capmatch.h"

using Json = nlohmann::ordered_json;

namespace {

struct Text {
  char* ptr = nullptr;
  ~Text() { capmatch_string_free(ptr); }
  Json json() const { return Json::parse(ptr); }
};

struct Handle {
  capmatch_instance* ptr = nullptr;
  ~Handle() { capmatch_instance_free(ptr); }
};

void load(const char* example, Handle& h) {
  Text doc;
  REQUIRE(capmatch_generate(example, nullptr, &doc.ptr, nullptr, nullptr) == CAPMATCH_OK);
  REQUIRE(capmatch_instance_parse(doc.ptr, &h.ptr) == CAPMATCH_OK);
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::string(capmatch_version()).size() > 0);
  capmatch_instance* inst = nullptr;
  CHECK(capmatch_instance_parse("{not json", &inst) == CAPMATCH_ERR_INPUT);
  CHECK(inst == nullptr);
  CHECK(std::string(capmatch_last_error()).size() > 0);
  CHECK(capmatch_instance_parse(nullptr, &inst) == CAPMATCH_ERR_INPUT);
  capmatch_instance_free(nullptr);
  capmatch_string_free(nullptr);
}

TEST_CASE("instance round trip and stats") {
  Handle h;
  load("intro", h);
  Text doc;
  REQUIRE(capmatch_instance_to_json(h.ptr, &doc.ptr) == CAPMATCH_OK);
  CHECK(doc.json()["students"].size() == 5);
  capmatch_stats s{};
  REQUIRE(capmatch_instance_stats(h.ptr, &s) == CAPMATCH_OK);
  CHECK(s.students == 5);
  CHECK(s.schools == 3);
  CHECK(s.total_capacity == 3);
  CHECK(s.unassigned == 2);
  CHECK(s.max_unassigned_length == 2);
}

TEST_CASE("stable and check") {
  Handle h;
  load("intro", h);
  Text st;
  REQUIRE(capmatch_stable(h.ptr, nullptr, &st.ptr) == CAPMATCH_OK);
  const Json mu{{"assignment", st.json()["matching"]}};
  Text report;
  REQUIRE(capmatch_check(h.ptr, mu.dump().c_str(), nullptr, "all", &report.ptr) == CAPMATCH_OK);
  const auto r = report.json();
  CHECK(r["stable"] == true);
  CHECK(r["perfect"] == false);
  CHECK(r["efficient"] == false);
  CHECK(r["dominated_by"].is_object());

  Text bad;
  CHECK(capmatch_check(h.ptr, mu.dump().c_str(), nullptr, "nonsense", &bad.ptr) == CAPMATCH_ERR_INPUT);
  CHECK(bad.ptr == nullptr);

  Text raised;
  REQUIRE(capmatch_stable(h.ptr, R"({"increase": {"w1": 1}})", &raised.ptr) == CAPMATCH_OK);
  CHECK(raised.json()["matching"]["u4"] == "w1");
}

TEST_CASE("solve statuses") {
  Handle problems;
  load("problems", problems);
  capmatch_solve_options o{"minsum-sp", "exact", 1, 3, 0, 1};
  Text out;
  REQUIRE(capmatch_solve(problems.ptr, &o, &out.ptr) == CAPMATCH_OK);
  CHECK(out.json()["objective"] == 3);

  Handle se;
  load("stable-eff", se);
  capmatch_solve_options tight{"minsum-se", "auto", 1, 1, 0, 1};
  Text inf;
  CHECK(capmatch_solve(se.ptr, &tight, &inf.ptr) == CAPMATCH_INFEASIBLE);
  REQUIRE(inf.ptr != nullptr);
  CHECK(inf.json()["status"] == "infeasible");

  capmatch_solve_options wrong{"minmax-sp", "lp-round", 0, 0, 0, 1};
  Text none;
  CHECK(capmatch_solve(se.ptr, &wrong, &none.ptr) == CAPMATCH_ERR_INPUT);

  Handle gap;
  load("minmaxse-gap", gap);
  capmatch_solve_options guarded{"minsum-se", "exact", 0, 0, 1, 1};
  Text g;
  CHECK(capmatch_solve(gap.ptr, &guarded, &g.ptr) == CAPMATCH_ERR_GUARD);
}

TEST_CASE("auto records the path taken") {
  Handle h;
  load("intro", h);
  capmatch_solve_options o{"minsum-sp", "auto", 0, 0, 0, 1};
  Text out;
  REQUIRE(capmatch_solve(h.ptr, &o, &out.ptr) == CAPMATCH_OK);
  CHECK(out.json()["method"] == "exact");

  Text doc;
  REQUIRE(capmatch_generate("random", R"({"students": 6, "schools": 3, "preference_length": [1, 1], "seed": 4})",
                            &doc.ptr, nullptr, nullptr) == CAPMATCH_OK);
  Handle single;
  REQUIRE(capmatch_instance_parse(doc.ptr, &single.ptr) == CAPMATCH_OK);
  Text out2;
  REQUIRE(capmatch_solve(single.ptr, &o, &out2.ptr) == CAPMATCH_OK);
  CHECK(out2.json()["method"] == "special-case");
}

TEST_CASE("generators through the C interface") {
  long long budget = 0, max_budget = 0;
  Text vc;
  REQUIRE(capmatch_generate("vertex-cover",
                            R"({"graph": {"vertices": ["a", "b"], "edges": [["a", "b"]]}, "h": 1})",
                            &vc.ptr, &budget, &max_budget) == CAPMATCH_OK);
  CHECK(budget == 2);
  CHECK(max_budget == -1);

  Text sat;
  REQUIRE(capmatch_generate("sat22",
                            R"({"formula": [[1,2,3],[1,-2,-3],[-1,2,-3],[-1,-2,3]], "eta": 3})",
                            &sat.ptr, &budget, &max_budget) == CAPMATCH_OK);
  CHECK(budget == 9);
  CHECK(max_budget == 3);

  Text sc;
  REQUIRE(capmatch_generate("set-cover", R"({"sets": [[1], [1, 2]], "k": 1})", &sc.ptr, &budget,
                            nullptr) == CAPMATCH_OK);
  CHECK(budget == 4);

  Text a, b;
  const char* params = R"({"students": 5, "schools": 4, "seed": 42})";
  REQUIRE(capmatch_generate("random", params, &a.ptr, nullptr, nullptr) == CAPMATCH_OK);
  REQUIRE(capmatch_generate("random", params, &b.ptr, nullptr, nullptr) == CAPMATCH_OK);
  CHECK(std::string(a.ptr) == std::string(b.ptr));

  Text bad;
  CHECK(capmatch_generate("mcc", R"({"graph": {"vertices": [1, 2], "edges": []}})", &bad.ptr, nullptr,
                          nullptr) == CAPMATCH_ERR_INPUT);
  CHECK(capmatch_generate("unknown", nullptr, &bad.ptr, nullptr, nullptr) == CAPMATCH_ERR_INPUT);
}

TEST_CASE("oracles") {
  Handle h;
  load("intro", h);
  Text all;
  REQUIRE(capmatch_oracle(h.ptr, "enumerate-stable", R"({"increase": {"w1": 1}})", nullptr, 0, &all.ptr) ==
          CAPMATCH_OK);
  CHECK(all.json()["count"] == 2);
  CHECK(all.json()["same_matched_students"] == true);
  Text eff;
  REQUIRE(capmatch_oracle(h.ptr, "efficiency", R"({"increase": {"w1": 1}})", nullptr, 0, &eff.ptr) ==
          CAPMATCH_OK);
  CHECK(eff.json()["efficient"] == true);
  CHECK(eff.json()["checker_agrees"] == true);
  Text g;
  CHECK(capmatch_oracle(h.ptr, "efficiency", nullptr, nullptr, 2, &g.ptr) == CAPMATCH_ERR_GUARD);
}
