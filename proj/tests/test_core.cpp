#include <doctest.h>

#include "capmatch/core.hpp"
#include "capmatch/generators.hpp"
#include "capmatch/json_io.hpp"
#include "support/corpus.hpp"

using namespace capmatch;

namespace {

const char* kTiny = R"({
  "students": ["a", "b"],
  "schools": [{"id": "x", "capacity": 1}],
  "preferences": {"a": ["x"], "b": ["x"]},
  "priorities": {"x": ["b", "a"]}
})";

std::string with(std::string doc, const std::string& from, const std::string& to) {
  doc.replace(doc.find(from), from.size(), to);
  return doc;
}

}  // namespace

TEST_CASE("tiny instance parses with ranks") {
  const auto inst = io::parse_instance(kTiny);
  CHECK(inst.num_students() == 2);
  CHECK(inst.num_schools() == 1);
  CHECK(inst.capacity(0) == 1);
  CHECK(inst.ranks_higher(0, 1, 0));
  CHECK(inst.prefers(0, 0, std::nullopt));
  CHECK(inst.find_student("b") == 1);
  CHECK_FALSE(inst.find_school("y").has_value());
  CHECK(inst.useful_increase(0) == 1);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(io::parse_instance("{"), InvalidInput);
  CHECK_THROWS_AS(io::parse_instance(with(kTiny, R"("capacity": 1)", R"("capacity": 0)")), InvalidInput);
  CHECK_THROWS_AS(io::parse_instance(with(kTiny, R"("x": ["b", "a"])", R"("x": ["b"])")), InvalidInput);
  CHECK_THROWS_AS(io::parse_instance(with(kTiny, R"("a": ["x"])", R"("a": ["x", "x"])")), InvalidInput);
  CHECK_THROWS_AS(io::parse_instance(with(kTiny, R"(["a", "b"])", R"(["a", "a"])")), InvalidInput);
  CHECK_THROWS_AS(io::parse_instance(with(kTiny, R"("a": ["x"])", R"("a": ["z"])")), InvalidInput);
  CHECK_THROWS_AS(io::parse_instance(with(kTiny, R"("a": ["x"])", R"("a": [])")), InvalidInput);
}

TEST_CASE("serialize and parse round-trip") {
  for (const char* name : {"intro", "problems", "stable-eff", "minmaxse-gap"}) {
    const auto inst = gen::example(name);
    const auto text = io::serialize_instance(inst);
    const auto again = io::parse_instance(text);
    CHECK(io::serialize_instance(again) == text);
    CHECK(io::instance_to_json(again) == io::instance_to_json(inst));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = corpus::instance(seed);
    const auto text = io::serialize_instance(inst);
    CHECK(io::serialize_instance(io::parse_instance(text)) == text);
  }
}

TEST_CASE("matching and capacity documents") {
  const auto inst = gen::intro();
  Matching mu(inst.num_students());
  mu.assign(0, 1);
  mu.assign(3, 0);
  const auto doc = io::matching_to_json(inst, mu);
  const auto back = io::matching_from_json(inst, doc);
  for (StudentId u = 0; u < inst.num_students(); ++u) CHECK(back[u] == mu[u]);

  const auto r = io::capacity_from_json(inst, io::parse_json(R"({"increase": {"w2": 3}})"));
  CHECK(r[0] == 0);
  CHECK(r[1] == 3);
  CHECK(r.linf() == 3);
  CHECK(io::capacity_from_json(inst, io::capacity_to_json(inst, r)).values()[1] == 3);
  CHECK_THROWS_AS(io::capacity_from_json(inst, io::parse_json(R"({"increase": {"w9": 1}})")), InvalidInput);
  CHECK_THROWS_AS(io::capacity_from_json(inst, io::parse_json(R"({"increase": {"w1": -1}})")), InvalidInput);
}

TEST_CASE("feasibility is monotone in the increase") {
  for (std::uint64_t seed = 100; seed < 300; ++seed) {
    const auto inst = corpus::instance(seed);
    Matching mu(inst.num_students());
    for (StudentId u = 0; u < inst.num_students(); ++u)
      mu.assign(u, inst.preferences(u)[static_cast<std::size_t>(seed) % inst.preferences(u).size()]);
    std::vector<int> r(static_cast<std::size_t>(inst.num_schools()));
    for (SchoolId w = 0; w < inst.num_schools(); ++w) r[w] = static_cast<int>((seed + w) % 3);
    const CapacityVector base(r);
    for (auto& x : r) ++x;
    const CapacityVector bigger(r);
    CHECK(base.dominated_by(bigger));
    if (is_feasible(inst, mu, base)) CHECK(is_feasible(inst, mu, bigger));
  }
}

TEST_CASE("instance stats") {
  const auto s = instance_stats(gen::intro());
  CHECK(s.students == 5);
  CHECK(s.schools == 3);
  CHECK(s.max_preference_length == 3);
  CHECK(s.max_priority_length == 5);
  CHECK(s.total_capacity == 3);
}
