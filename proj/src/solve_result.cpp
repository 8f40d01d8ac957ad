#include "capmatch/solve_result.hpp"

#include "capmatch/deferred_acceptance.hpp"
#include "capmatch/efficiency.hpp"

namespace capmatch {

Certificates certify(const Instance& inst, const Matching& mu, const CapacityVector& r) {
  Certificates c;
  c.stable = is_stable(inst, mu, r);
  c.perfect = mu.is_perfect();
  c.efficient = is_efficient(inst, mu, r).efficient;
  return c;
}

void finish_result(SolveResult& result, const Instance& inst, long long budget, Matching mu,
                   CapacityVector r) {
  result.certificates = certify(inst, mu, r);
  result.witness = std::move(mu);
  result.increase = std::move(r);
  result.status = result.objective && *result.objective <= budget ? SolveStatus::kFeasible
                                                                  : SolveStatus::kInfeasible;
}

std::string status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kFeasible: return "feasible";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

io::Json result_to_json(const Instance& inst, const SolveResult& result) {
  io::Json doc;
  doc["status"] = status_name(result.status);
  doc["method"] = result.method;
  doc["objective"] = result.objective ? io::Json(*result.objective) : io::Json(nullptr);
  if (result.increase) {
    doc["norms"] = {{"l1", result.increase->l1()}, {"linf", result.increase->linf()}};
    doc["increase"] = io::capacity_to_json(inst, *result.increase)["increase"];
  } else {
    doc["norms"] = nullptr;
    doc["increase"] = nullptr;
  }
  doc["matching"] =
      result.witness ? io::matching_to_json(inst, *result.witness)["assignment"] : io::Json(nullptr);
  if (result.witness) {
    doc["certificates"] = {{"stable", result.certificates.stable},
                           {"perfect", result.certificates.perfect},
                           {"efficient", result.certificates.efficient}};
  } else {
    doc["certificates"] = nullptr;
  }
  return doc;
}

}  // namespace capmatch
