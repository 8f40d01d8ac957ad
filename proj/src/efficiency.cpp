#include "capmatch/efficiency.hpp"

#include <string>

#include "capmatch/deferred_acceptance.hpp"

namespace capmatch {

std::vector<EnvyEdge> justified_envy_pairs(const Instance& inst, const Matching& mu) {
  validate_matching(inst, mu);
  std::vector<EnvyEdge> out;
  for (StudentId u = 0; u < inst.num_students(); ++u) {
    for (StudentId v = 0; v < inst.num_students(); ++v) {
      if (u == v || !mu[v]) continue;
      const SchoolId w = *mu[v];
      if (inst.prefers(u, w, mu[u]) && inst.ranks_higher(w, u, v)) out.push_back({u, v, w});
    }
  }
  return out;
}

bool dominates(const Instance& inst, const Matching& mu, const Matching& sigma) {
  if (mu.num_students() != inst.num_students() || sigma.num_students() != inst.num_students())
    throw InvalidInput("matching does not cover the instance's students");
  bool strict = false;
  for (StudentId u = 0; u < inst.num_students(); ++u) {
    if (mu[u] == sigma[u]) continue;
    if (!mu[u]) return false;
    if (!inst.prefers(u, *mu[u], sigma[u])) return false;
    strict = true;
  }
  return strict;
}

namespace {

struct Arc {
  SchoolId to;
  StudentId student;
};

}  // namespace

EfficiencyVerdict is_efficient(const Instance& inst, const Matching& mu, const CapacityVector& r) {
  validate_matching(inst, mu);
  if (!is_feasible(inst, mu, r)) throw InvalidInput("matching is infeasible under q + r");
  const int m = inst.num_schools();
  const auto caps = effective_capacities(inst, r);
  const auto occ = mu.occupancy(m);

  // Any arc into slack: move that student.
  for (StudentId u = 0; u < inst.num_students(); ++u) {
    for (SchoolId w : inst.preferences(u)) {
      if (mu[u] && *mu[u] == w) break;
      if (occ[w] < caps[w]) {
        Matching better = mu;
        better.assign(u, w);
        return {false, std::move(better)};
      }
    }
  }

  std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(m));
  const auto members = mu.by_school(m);
  for (SchoolId w = 0; w < m; ++w) {
    for (StudentId u : members[w]) {
      for (SchoolId target : inst.preferences(u)) {
        if (target == w) break;
        arcs[w].push_back({target, u});
      }
    }
  }

  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> color(static_cast<std::size_t>(m), kWhite);
  struct Frame {
    SchoolId node;
    std::size_t next_arc;
  };
  for (SchoolId root = 0; root < m; ++root) {
    if (color[root] != kWhite) continue;
    std::vector<Frame> stack{{root, 0}};
    std::vector<Arc> path;  // path[i] leaves stack[i].node
    color[root] = kGrey;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next_arc == arcs[top.node].size()) {
        color[top.node] = kBlack;
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      const Arc arc = arcs[top.node][top.next_arc++];
      if (color[arc.to] == kGrey) {
        // Cycle: from the frame holding arc.to through the current node.
        std::size_t start = 0;
        while (stack[start].node != arc.to) ++start;
        Matching better = mu;
        for (std::size_t i = start; i < path.size(); ++i)
          better.assign(path[i].student, path[i].to);
        better.assign(arc.student, arc.to);
        return {false, std::move(better)};
      }
      if (color[arc.to] == kWhite) {
        color[arc.to] = kGrey;
        path.push_back(arc);
        stack.push_back({arc.to, 0});
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

struct DominanceSearch {
  const Instance& inst;
  const Matching& target;
  std::vector<int> caps;
  std::vector<int> occ;
  Matching current;

  bool run(StudentId u) {
    if (u == inst.num_students()) return dominates(inst, current, target);
    for (SchoolId w : inst.preferences(u)) {
      if (occ[w] >= caps[w]) continue;
      ++occ[w];
      current.assign(u, w);
      const bool hit = run(u + 1);
      current.unassign(u);
      --occ[w];
      if (hit) return true;
    }
    return run(u + 1);
  }
};

}  // namespace

bool efficiency_oracle(const Instance& inst, const Matching& mu, const CapacityVector& r,
                       std::uint64_t guard) {
  validate_matching(inst, mu);
  if (!is_feasible(inst, mu, r)) throw InvalidInput("matching is infeasible under q + r");
  const auto space = matching_search_space(inst);
  if (space > guard)
    throw GuardExceeded("efficiency oracle needs " + std::to_string(space) +
                        " candidates, guard is " + std::to_string(guard));
  DominanceSearch search{inst, mu, effective_capacities(inst, r),
                         std::vector<int>(static_cast<std::size_t>(inst.num_schools()), 0),
                         Matching(inst.num_students())};
  return !search.run(0);
}

}  // namespace capmatch
