#pragma once

// Minimum largest per-school increase for a stable perfect matching.

#include <optional>

#include "capmatch/core.hpp"
#include "capmatch/solve_result.hpp"

namespace capmatch {

/// Raises every school by the same level, one step at a time, until the
/// student-optimal stable matching is perfect. The objective is that level;
/// the witness is the student-optimal stable matching at it.
SolveResult solve_minmax_sp(const Instance& inst, std::optional<long long> budget = std::nullopt);

/// Lowers r to r'[w] = max(0, |mu^-1(w)| - q[w]). Throws InvalidInput if mu is
/// not stable and feasible under q + r.
CapacityVector trim(const Instance& inst, const Matching& mu, const CapacityVector& r);

}  // namespace capmatch
