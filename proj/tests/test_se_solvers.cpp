#include <doctest.h>

#include "capmatch/efficiency.hpp"
#include "capmatch/generators.hpp"
#include "capmatch/se_solvers.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace capmatch;

namespace {

CapacityVector at(const Instance& inst, std::initializer_list<std::pair<const char*, int>> seats) {
  CapacityVector r(inst.num_schools());
  for (auto [name, x] : seats) r.set(*inst.find_school(name), x);
  return r;
}

}  // namespace

TEST_CASE("intro: one seat at the first school gives a stable efficient matching") {
  const auto inst = gen::intro();
  const auto res = solve_minsum_se(inst);
  REQUIRE(res.feasible());
  CHECK(res.objective == 1);
  CHECK(std::vector<int>(res.increase->values().begin(), res.increase->values().end()) ==
        std::vector<int>{1, 0, 0});
  CHECK(res.certificates.stable);
  CHECK(res.certificates.efficient);
  CHECK(solve_minmax_se(inst).objective == 1);
}

TEST_CASE("stable-eff: no stable efficient matching with one extra seat") {
  const auto inst = gen::stable_eff();
  CHECK_FALSE(exists_stable_efficient(inst, CapacityVector(5)).exists);
  CHECK(solve_minsum_se(inst, 1).status == SolveStatus::kInfeasible);
  CHECK(oracle::min_sum(inst, 1, oracle::goal_efficient) == std::nullopt);
  const auto res = solve_minsum_se(inst);
  REQUIRE(res.feasible());
  CHECK(res.objective == 2);
  CHECK(oracle::min_sum(inst, 2, oracle::goal_efficient) == 2);
}

TEST_CASE("max-norm gap example") {
  const auto inst = gen::minmaxse_gap();
  CHECK(inst.num_students() == 15);
  CHECK(inst.num_schools() == 15);
  CHECK_FALSE(exists_stable_efficient(inst, CapacityVector::uniform(15, 1)).exists);
  CHECK(exists_stable_efficient(inst, at(inst, {{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}, {"v5", 1}})).exists);
  CHECK_FALSE(exists_stable_efficient(inst, CapacityVector(15)).exists);
  const auto res = solve_minmax_se(inst);
  REQUIRE(res.feasible());
  CHECK(res.objective == 1);
  CHECK(res.increase->linf() == 1);
  CHECK(res.certificates.efficient);
}

TEST_CASE("existence check against the oracle") {
  std::mt19937_64 rng(29);
  std::vector<std::pair<Instance, CapacityVector>> cases;
  cases.emplace_back(gen::stable_eff(), CapacityVector(5));
  cases.emplace_back(gen::stable_eff(), CapacityVector({0, 1, 0, 0, 0}));
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto inst = corpus::instance(seed, {5, 4, 2});
    std::vector<int> r(static_cast<std::size_t>(inst.num_schools()));
    for (int& x : r) x = std::uniform_int_distribution<int>(0, 1)(rng);
    cases.emplace_back(std::move(inst), CapacityVector(r));
  }
  int yes = 0, no = 0;
  for (const auto& [inst, r] : cases) {
    const auto caps = oracle::caps_with(inst, {r.values().begin(), r.values().end()});
    const auto verdict = exists_stable_efficient(inst, r);
    const auto stable = oracle::stable_matchings(inst, caps);
    const bool any = std::any_of(stable.begin(), stable.end(),
                                 [&](const auto& a) { return oracle::efficient(inst, a, caps); });
    CHECK(verdict.exists == any);
    if (verdict.exists) {
      ++yes;
      REQUIRE(verdict.witness);
      CHECK(efficiency_oracle(inst, *verdict.witness, r));
    } else {
      ++no;
    }
  }
  CHECK(yes > 0);
  CHECK(no >= 2);
}

TEST_CASE("exact solvers match brute force on tiny instances") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = corpus::instance(seed, {4, 3, 2});
    const auto sum = solve_minsum_se(inst);
    const auto max = solve_minmax_se(inst);
    REQUIRE(sum.feasible());
    REQUIRE(max.feasible());
    CHECK(*sum.objective == *oracle::min_sum(inst, 8, oracle::goal_efficient));
    CHECK(*max.objective == *oracle::min_max(inst, 4, oracle::goal_efficient));
    CHECK(*max.objective <= sum.increase->linf());
  }
}
