#include "capmatch/se_solvers.hpp"

#include <algorithm>
#include <numeric>

#include "capmatch/deferred_acceptance.hpp"
#include "capmatch/efficiency.hpp"

namespace capmatch {

StableEfficientVerdict exists_stable_efficient(const Instance& inst, const CapacityVector& r) {
  StableEfficientVerdict out;
  out.student_optimal = deferred_acceptance(inst, r);
  out.exists = is_efficient(inst, out.student_optimal, r).efficient;
  if (out.exists) out.witness = out.student_optimal;
  return out;
}

namespace {

std::optional<Matching> stable_efficient_test(const Instance& inst, const CapacityVector& r) {
  auto verdict = exists_stable_efficient(inst, r);
  return verdict.witness;
}

CapacityVector to_vector(std::span<const int> r) {
  return CapacityVector(std::vector<int>(r.begin(), r.end()));
}

}  // namespace

SolveResult solve_minsum_se(const Instance& inst, std::optional<long long> budget,
                            const SearchOptions& options) {
  const long long k = budget.value_or(full_useful_budget(inst));
  const auto bounds = useful_bounds(inst);
  const long long reach = std::min(k, full_useful_budget(inst));
  FirstMatch<Matching> search(options,
                              [&](const CapacityVector& r) { return stable_efficient_test(inst, r); });
  SolveResult result;
  result.method = "exact";
  for (long long total = 0; total <= reach; ++total) {
    for_each_vector_with_sum(bounds, total,
                             [&](std::span<const int> r) { return search.offer(to_vector(r)); });
    search.flush();
    if (const auto& hit = search.found()) {
      result.objective = total;
      finish_result(result, inst, k, hit->second, hit->first);
      return result;
    }
  }
  result.status = SolveStatus::kInfeasible;
  return result;
}

SolveResult solve_minmax_se(const Instance& inst, std::optional<long long> budget,
                            const SearchOptions& options) {
  const auto full = useful_bounds(inst);
  const int top = full.empty() ? 0 : *std::max_element(full.begin(), full.end());
  const long long k = budget.value_or(top);
  const long long reach = std::min<long long>(k, top);
  FirstMatch<Matching> search(options,
                              [&](const CapacityVector& r) { return stable_efficient_test(inst, r); });
  SolveResult result;
  result.method = "exact";
  for (int level = 0; level <= reach; ++level) {
    const auto bounds = useful_bounds(inst, level);
    const long long uniform_sum = std::accumulate(bounds.begin(), bounds.end(), 0LL);
    search.offer(CapacityVector(bounds));
    for (long long total = level; total <= uniform_sum && !search.found(); ++total) {
      const bool go_on = for_each_vector_with_sum(bounds, total, [&](std::span<const int> r) {
        if (*std::max_element(r.begin(), r.end()) != level) return true;
        if (std::equal(r.begin(), r.end(), bounds.begin())) return true;
        return search.offer(to_vector(r));
      });
      if (!go_on) break;
    }
    search.flush();
    if (const auto& hit = search.found()) {
      result.objective = level;
      finish_result(result, inst, k, hit->second, hit->first);
      return result;
    }
  }
  result.status = SolveStatus::kInfeasible;
  return result;
}

}  // namespace capmatch
