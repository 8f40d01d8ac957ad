#include <doctest.h>

#include "capmatch/deferred_acceptance.hpp"
#include "capmatch/generators.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace capmatch;

namespace {

CapacityVector random_increase(const Instance& inst, std::mt19937_64& rng, int hi) {
  std::vector<int> r(static_cast<std::size_t>(inst.num_schools()));
  for (int& x : r) x = std::uniform_int_distribution<int>(0, hi)(rng);
  return CapacityVector(std::move(r));
}

}  // namespace

TEST_CASE("intro: the only stable matching leaves two students out") {
  const auto inst = gen::intro();
  const auto ctx = student_optimal_stable(inst);
  CHECK(ctx.s() == 2);
  CHECK(inst.student_name(ctx.unassigned[0]) == "u4");
  CHECK(inst.student_name(ctx.unassigned[1]) == "u5");
  CHECK(ctx.delta_un == 2);
  const auto all = enumerate_stable_matchings(inst, CapacityVector(3));
  REQUIRE(all.size() == 1);
  CHECK(oracle::to_assignment(all[0]) == oracle::to_assignment(ctx.matching));
}

TEST_CASE("intro with one extra seat at the first school") {
  // Two stable matchings; the student-optimal one is the efficient one.
  const auto inst = gen::intro();
  const CapacityVector r({1, 0, 0});
  const auto all = enumerate_stable_matchings(inst, r);
  REQUIRE(all.size() == 2);
  const auto mu = deferred_acceptance(inst, r);
  CHECK(std::count_if(all.begin(), all.end(), [&](const Matching& sigma) {
          return oracle::to_assignment(sigma) == oracle::to_assignment(mu);
        }) == 1);
  CHECK(mu[*inst.find_student("u1")] == inst.find_school("w1"));
  CHECK(mu[*inst.find_student("u4")] == inst.find_school("w1"));
  CHECK(mu[*inst.find_student("u2")] == inst.find_school("w2"));
  CHECK(mu[*inst.find_student("u3")] == inst.find_school("w3"));
  CHECK_FALSE(mu.is_matched(*inst.find_student("u5")));
}

TEST_CASE("blocking pairs match the definition") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = corpus::instance(seed, {5, 4, 2});
    const auto r = random_increase(inst, rng, 1);
    const auto caps = oracle::caps_with(inst, {r.values().begin(), r.values().end()});
    oracle::for_each_feasible(inst, caps, [&](const oracle::Assignment& a) {
      Matching mu(inst.num_students());
      for (int u = 0; u < inst.num_students(); ++u)
        if (a[u] >= 0) mu.assign(u, a[u]);
      CHECK(blocking_pairs(inst, mu, r).empty() == !oracle::has_blocking_pair(inst, a, caps));
    });
  }
}

TEST_CASE("deferred acceptance output is stable and order independent") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = corpus::instance(seed);
    const auto r = random_increase(inst, rng, 2);
    const auto mu = deferred_acceptance(inst, r);
    CHECK(is_feasible(inst, mu, r));
    CHECK(blocking_pairs(inst, mu, r).empty());
    std::vector<StudentId> order(static_cast<std::size_t>(inst.num_students()));
    for (StudentId u = 0; u < inst.num_students(); ++u) order[u] = inst.num_students() - 1 - u;
    CHECK(oracle::to_assignment(deferred_acceptance(inst, r, order)) == oracle::to_assignment(mu));
  }
}

TEST_CASE("stable enumeration agrees with the definition; rural hospitals; student optimality") {
  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = corpus::instance(seed, {5, 4, 2});
    const auto r = random_increase(inst, rng, 1);
    const auto caps = oracle::caps_with(inst, {r.values().begin(), r.values().end()});
    auto expected = oracle::stable_matchings(inst, caps);
    std::vector<oracle::Assignment> got;
    for (const auto& mu : enumerate_stable_matchings(inst, r)) got.push_back(oracle::to_assignment(mu));
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);

    const auto best = oracle::to_assignment(deferred_acceptance(inst, r));
    for (const auto& a : expected) {
      for (int u = 0; u < inst.num_students(); ++u) {
        CHECK((a[u] >= 0) == (best[u] >= 0));
        CHECK((a[u] == best[u] || oracle::wants(inst, a, u, best[u])));
      }
    }
  }
}

TEST_CASE("monotonicity under added capacity") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = corpus::instance(seed);
    const auto r = random_increase(inst, rng, 1);
    std::vector<int> more(r.values().begin(), r.values().end());
    for (int& x : more) x += std::uniform_int_distribution<int>(0, 2)(rng);
    const CapacityVector r2(more);
    const auto lo = deferred_acceptance(inst, r);
    const auto hi = deferred_acceptance(inst, r2);
    const auto a = oracle::to_assignment(lo);
    for (StudentId u = 0; u < inst.num_students(); ++u)
      CHECK((hi[u] == lo[u] || oracle::wants(inst, a, u, *hi[u])));
    const auto caps = effective_capacities(inst, r);
    const auto occ = lo.occupancy(inst.num_schools());
    for (SchoolId w = 0; w < inst.num_schools(); ++w) {
      if (occ[w] >= caps[w]) continue;
      for (StudentId u = 0; u < inst.num_students(); ++u)
        if (hi[u] == w) CHECK(lo[u] == w);
    }
  }
}

TEST_CASE("enumeration guard") {
  const auto inst = gen::minmaxse_gap();
  CHECK_THROWS_AS(enumerate_stable_matchings(inst, CapacityVector(inst.num_schools()), SIZE_MAX, 10),
                  GuardExceeded);
}
