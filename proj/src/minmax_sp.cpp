#include "capmatch/minmax_sp.hpp"

#include <algorithm>

#include "capmatch/deferred_acceptance.hpp"

namespace capmatch {

SolveResult solve_minmax_sp(const Instance& inst, std::optional<long long> budget) {
  int cap = 0;
  for (SchoolId w = 0; w < inst.num_schools(); ++w) cap = std::max(cap, inst.useful_increase(w));
  const long long k = budget.value_or(cap);

  SolveResult result;
  result.method = "uniform";
  for (int level = 0; level <= cap; ++level) {
    auto r = CapacityVector::uniform(inst.num_schools(), level);
    auto mu = deferred_acceptance(inst, r);
    if (mu.is_perfect()) {
      result.objective = level;
      finish_result(result, inst, k, std::move(mu), std::move(r));
      return result;
    }
  }
  throw Error(ErrorCode::kInternal, "uniform increase to the useful bound left a student unmatched");
}

CapacityVector trim(const Instance& inst, const Matching& mu, const CapacityVector& r) {
  validate_matching(inst, mu);
  if (!is_stable(inst, mu, r)) throw InvalidInput("trim needs a stable matching under q + r");
  const auto occ = mu.occupancy(inst.num_schools());
  CapacityVector out(inst.num_schools());
  for (SchoolId w = 0; w < inst.num_schools(); ++w) out.set(w, std::max(0, occ[w] - inst.capacity(w)));
  return out;
}

}  // namespace capmatch
