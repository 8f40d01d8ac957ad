#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "capmatch/core.hpp"

namespace capmatch {

/// `envier` prefers school = mu(envied) to its own match and has higher
/// priority there than `envied`.
struct EnvyEdge {
  StudentId envier;
  StudentId envied;
  SchoolId school;
  friend bool operator==(const EnvyEdge&, const EnvyEdge&) = default;
};

std::vector<EnvyEdge> justified_envy_pairs(const Instance& inst, const Matching& mu);

/// Every student weakly prefers mu to sigma and at least one strictly.
bool dominates(const Instance& inst, const Matching& mu, const Matching& sigma);

struct EfficiencyVerdict {
  bool efficient = true;
  /// Feasible matching dominating the input, present iff !efficient.
  std::optional<Matching> witness;
};

/// Pareto efficiency for the students under q + r.
///
/// Builds the improvement graph over schools plus a virtual source: for each
/// student u and each school w' that u strictly prefers to mu(u), an arc
/// mu(u) -> w' (source -> w' when u is unmatched). mu is dominated iff an arc
/// ends at an under-filled school, or the school subgraph has a directed
/// cycle. The witness shifts one student into slack or rotates along the
/// first cycle found by DFS in document order.
EfficiencyVerdict is_efficient(const Instance& inst, const Matching& mu, const CapacityVector& r);

inline constexpr std::uint64_t kDefaultEfficiencyOracleGuard = 2'000'000;

/// Exhaustive check: enumerates every feasible matching under q + r and
/// reports whether none dominates mu.
bool efficiency_oracle(const Instance& inst, const Matching& mu, const CapacityVector& r,
                       std::uint64_t guard = kDefaultEfficiencyOracleGuard);

}  // namespace capmatch
