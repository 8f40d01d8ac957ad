#include <doctest.h>

#include "capmatch/deferred_acceptance.hpp"
#include "capmatch/generators.hpp"
#include "capmatch/minmax_sp.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace capmatch;

TEST_CASE("worked examples") {
  CHECK(solve_minmax_sp(gen::intro()).objective == 2);
  CHECK(solve_minmax_sp(gen::problems()).objective == 2);
  CHECK(solve_minmax_sp(gen::stable_eff()).objective == 0);
  CHECK(solve_minmax_sp(gen::problems(), 1).status == SolveStatus::kInfeasible);
}

TEST_CASE("level is minimal and the witness is trimmed") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto inst = corpus::instance(seed);
    const auto res = solve_minmax_sp(inst);
    REQUIRE(res.feasible());
    const int k = static_cast<int>(*res.objective);
    CHECK(res.witness->is_perfect());
    CHECK(res.increase->linf() <= k);
    CHECK(blocking_pairs(inst, *res.witness, *res.increase).empty());
    if (k > 0) {
      const auto below = deferred_acceptance(inst, CapacityVector::uniform(inst.num_schools(), k - 1));
      CHECK_FALSE(below.is_perfect());
    }
  }
}

TEST_CASE("level equals the brute-force minimum on tiny instances") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto inst = corpus::instance(seed, {4, 3, 2});
    const auto expected = oracle::min_max(inst, 4, oracle::goal_perfect);
    REQUIRE(expected);
    CHECK(*solve_minmax_sp(inst).objective == *expected);
  }
}

TEST_CASE("witness weakly beats every stable matching within the level") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = corpus::instance(seed, {5, 4, 2});
    const auto res = solve_minmax_sp(inst);
    const int k = static_cast<int>(*res.objective);
    std::vector<int> r(static_cast<std::size_t>(inst.num_schools()));
    for (int& x : r) x = std::uniform_int_distribution<int>(0, k)(rng);
    const auto witness = oracle::to_assignment(*res.witness);
    for (const auto& a : oracle::stable_matchings(inst, oracle::caps_with(inst, r)))
      for (int u = 0; u < inst.num_students(); ++u)
        CHECK((a[u] == witness[u] || oracle::wants(inst, a, u, witness[u])));
  }
}

TEST_CASE("trim keeps stability and shrinks the vector") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = corpus::instance(seed);
    const auto r = CapacityVector::uniform(inst.num_schools(), 2);
    const auto mu = deferred_acceptance(inst, r);
    const auto t = trim(inst, mu, r);
    CHECK(t.dominated_by(r));
    CHECK(is_feasible(inst, mu, t));
    CHECK(blocking_pairs(inst, mu, t).empty());
  }
  const auto inst = gen::intro();
  Matching unstable(inst.num_students());
  CHECK_THROWS_AS(trim(inst, unstable, CapacityVector(3)), InvalidInput);
}
