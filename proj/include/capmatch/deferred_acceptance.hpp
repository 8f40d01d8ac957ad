#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "capmatch/core.hpp"

namespace capmatch {

/// Student-optimal stable matching together with the assigned/unassigned split.
struct StableContext {
  Matching matching;
  std::vector<StudentId> unassigned;  // document order
  std::vector<StudentId> assigned;    // document order
  int delta_un = 0;                   // longest list among unassigned, 0 if none

  int s() const { return static_cast<int>(unassigned.size()); }
};

/// Student-proposing deferred acceptance under capacities q + r. Free students
/// propose in round-robin document order unless `proposal_order` is given
/// (a permutation of all students); the outcome does not depend on it.
Matching deferred_acceptance(const Instance& inst, const CapacityVector& r,
                             std::span<const StudentId> proposal_order = {});

StableContext student_optimal_stable(const Instance& inst, const CapacityVector& r);
StableContext student_optimal_stable(const Instance& inst);

struct BlockingPair {
  StudentId student;
  SchoolId school;
  friend bool operator==(const BlockingPair&, const BlockingPair&) = default;
};

/// All blocking pairs of mu under q + r, ordered by student then by the
/// student's preference. Throws InvalidInput when mu is infeasible.
std::vector<BlockingPair> blocking_pairs(const Instance& inst, const Matching& mu,
                                         const CapacityVector& r);
bool is_stable(const Instance& inst, const Matching& mu, const CapacityVector& r);

inline constexpr std::uint64_t kDefaultStableEnumerationGuard = 2'000'000;

/// Every stable feasible matching under q + r, found by exhaustive search over
/// partial maps U -> W u {unmatched}. The product of per-student option counts
/// must not exceed `guard`; at most `limit` matchings are returned.
std::vector<Matching> enumerate_stable_matchings(
    const Instance& inst, const CapacityVector& r, std::size_t limit = SIZE_MAX,
    std::uint64_t guard = kDefaultStableEnumerationGuard);

/// Product over students of (|A(u)| + 1), saturating at UINT64_MAX.
std::uint64_t matching_search_space(const Instance& inst);

}  // namespace capmatch
