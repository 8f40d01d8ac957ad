#pragma once

// Capacity increases admitting a matching that is both stable and efficient.

#include <optional>

#include "capmatch/core.hpp"
#include "capmatch/search.hpp"
#include "capmatch/solve_result.hpp"

namespace capmatch {

struct StableEfficientVerdict {
  bool exists = false;
  Matching student_optimal;         // the only candidate worth checking
  std::optional<Matching> witness;  // set iff exists
};

/// A stable efficient matching under q + r exists iff the student-optimal
/// stable matching is efficient.
StableEfficientVerdict exists_stable_efficient(const Instance& inst, const CapacityVector& r);

/// Capacity vectors by increasing |r|_1, earlier schools first at equal norm.
SolveResult solve_minsum_se(const Instance& inst, std::optional<long long> budget = std::nullopt,
                            const SearchOptions& options = {});

/// Levels k = 0, 1, ...: the uniform vector (clipped to useful bounds) first,
/// then every other vector with |r|_inf = k by increasing |r|_1.
SolveResult solve_minmax_se(const Instance& inst, std::optional<long long> budget = std::nullopt,
                            const SearchOptions& options = {});

}  // namespace capmatch
