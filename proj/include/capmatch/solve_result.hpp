#pragma once

#include <optional>
#include <string>

#include "capmatch/core.hpp"
#include "capmatch/json_io.hpp"

namespace capmatch {

enum class SolveStatus { kFeasible, kInfeasible, kNotApplicable };

struct Certificates {
  bool stable = false;
  bool perfect = false;
  bool efficient = false;
};

/// Stability, perfectness and efficiency of mu under q + r, each checked
/// from scratch.
Certificates certify(const Instance& inst, const Matching& mu, const CapacityVector& r);

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  /// The method's value. Exhaustive and special-case methods report the
  /// witness norm. Methods that pick an assignment vector (formula, ip,
  /// lp-round, greedy) report n_je of the normalized vector plus |U_un|;
  /// their witness may need fewer seats.
  std::optional<long long> objective;
  std::optional<CapacityVector> increase;
  std::optional<Matching> witness;
  Certificates certificates;
  std::string method;

  bool feasible() const { return status == SolveStatus::kFeasible; }
};

/// Fills witness, increase and certificates, then sets the status by
/// comparing the objective with the budget.
void finish_result(SolveResult& result, const Instance& inst, long long budget, Matching mu,
                   CapacityVector r);

std::string status_name(SolveStatus status);

/// {"status", "method", "objective", "norms", "increase", "matching", "certificates"};
/// absent parts are null.
io::Json result_to_json(const Instance& inst, const SolveResult& result);

}  // namespace capmatch
