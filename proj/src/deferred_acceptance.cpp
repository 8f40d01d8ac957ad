#include "capmatch/deferred_acceptance.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace capmatch {

Matching deferred_acceptance(const Instance& inst, const CapacityVector& r,
                             std::span<const StudentId> proposal_order) {
  validate_capacity_vector(inst, r);
  const int n = inst.num_students();
  const int m = inst.num_schools();
  const auto caps = effective_capacities(inst, r);

  std::deque<StudentId> free;
  if (proposal_order.empty()) {
    for (StudentId u = 0; u < n; ++u) free.push_back(u);
  } else {
    if (static_cast<int>(proposal_order.size()) != n)
      throw InvalidInput("proposal order must list every student once");
    free.assign(proposal_order.begin(), proposal_order.end());
  }

  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<StudentId>> held(static_cast<std::size_t>(m));

  while (!free.empty()) {
    const StudentId u = free.front();
    free.pop_front();
    const auto prefs = inst.preferences(u);
    if (next[u] >= prefs.size()) continue;  // exhausted, stays unmatched
    const SchoolId w = prefs[next[u]++];
    auto& h = held[w];
    h.push_back(u);
    if (static_cast<int>(h.size()) > caps[w]) {
      auto worst = std::max_element(h.begin(), h.end(), [&](StudentId a, StudentId b) {
        return inst.school_rank(w, a) < inst.school_rank(w, b);
      });
      free.push_back(*worst);
      h.erase(worst);
    }
  }

  Matching mu(n);
  for (SchoolId w = 0; w < m; ++w)
    for (StudentId u : held[w]) mu.assign(u, w);
  return mu;
}

StableContext student_optimal_stable(const Instance& inst, const CapacityVector& r) {
  StableContext ctx;
  ctx.matching = deferred_acceptance(inst, r);
  for (StudentId u = 0; u < inst.num_students(); ++u) {
    if (ctx.matching.is_matched(u)) {
      ctx.assigned.push_back(u);
    } else {
      ctx.unassigned.push_back(u);
      ctx.delta_un = std::max(ctx.delta_un, static_cast<int>(inst.preferences(u).size()));
    }
  }
  return ctx;
}

StableContext student_optimal_stable(const Instance& inst) {
  return student_optimal_stable(inst, CapacityVector(inst.num_schools()));
}

std::vector<BlockingPair> blocking_pairs(const Instance& inst, const Matching& mu,
                                         const CapacityVector& r) {
  validate_matching(inst, mu);
  if (!is_feasible(inst, mu, r)) throw InvalidInput("matching is infeasible under q + r");
  const int m = inst.num_schools();
  const auto caps = effective_capacities(inst, r);
  std::vector<int> occ(static_cast<std::size_t>(m), 0);
  std::vector<int> worst(static_cast<std::size_t>(m), -1);
  for (StudentId u = 0; u < mu.num_students(); ++u) {
    if (const auto w = mu[u]) {
      ++occ[*w];
      worst[*w] = std::max(worst[*w], inst.school_rank(*w, u));
    }
  }
  std::vector<BlockingPair> out;
  for (StudentId u = 0; u < inst.num_students(); ++u) {
    for (SchoolId w : inst.preferences(u)) {
      if (mu[u] && *mu[u] == w) break;  // only strictly preferred schools
      if (occ[w] < caps[w] || worst[w] > inst.school_rank(w, u)) out.push_back({u, w});
    }
  }
  return out;
}

bool is_stable(const Instance& inst, const Matching& mu, const CapacityVector& r) {
  return blocking_pairs(inst, mu, r).empty();
}

std::uint64_t matching_search_space(const Instance& inst) {
  std::uint64_t total = 1;
  for (StudentId u = 0; u < inst.num_students(); ++u) {
    const std::uint64_t options = inst.preferences(u).size() + 1;
    if (total > UINT64_MAX / options) return UINT64_MAX;
    total *= options;
  }
  return total;
}

namespace {

struct StableSearch {
  const Instance& inst;
  const CapacityVector& r;
  std::vector<int> caps;
  std::vector<int> occ;
  Matching current;
  std::vector<Matching> found;
  std::size_t limit;

  void run(StudentId u) {
    if (found.size() >= limit) return;
    if (u == inst.num_students()) {
      if (blocking_pairs(inst, current, r).empty()) found.push_back(current);
      return;
    }
    for (SchoolId w : inst.preferences(u)) {
      if (occ[w] >= caps[w]) continue;
      ++occ[w];
      current.assign(u, w);
      run(u + 1);
      current.unassign(u);
      --occ[w];
    }
    run(u + 1);
  }
};

}  // namespace

std::vector<Matching> enumerate_stable_matchings(const Instance& inst, const CapacityVector& r,
                                                 std::size_t limit, std::uint64_t guard) {
  validate_capacity_vector(inst, r);
  const auto space = matching_search_space(inst);
  if (space > guard)
    throw GuardExceeded("stable-matching enumeration needs " + std::to_string(space) +
                        " candidates, guard is " + std::to_string(guard));
  StableSearch search{inst, r, effective_capacities(inst, r),
                      std::vector<int>(static_cast<std::size_t>(inst.num_schools()), 0),
                      Matching(inst.num_students()), {}, limit};
  search.run(0);
  return std::move(search.found);
}

}  // namespace capmatch
