#include "capmatch/minsum_sp.hpp"

#include <algorithm>
#include <string>

namespace capmatch {

long long default_budget(const Instance& inst) { return full_useful_budget(inst); }

namespace {

SolveResult from_realization(const Instance& inst, long long budget, std::string method,
                             long long objective, Realization realization) {
  SolveResult result;
  result.method = std::move(method);
  result.objective = objective;
  finish_result(result, inst, budget, std::move(realization.matching),
                std::move(realization.increase));
  return result;
}

SolveResult trivial_result(const Instance& inst, long long budget, std::string method,
                           const StableContext& ctx) {
  SolveResult result;
  result.method = std::move(method);
  result.objective = 0;
  finish_result(result, inst, budget, ctx.matching, CapacityVector(inst.num_schools()));
  return result;
}

}  // namespace

SolveResult solve_formula(const Instance& inst, std::optional<long long> budget,
                          std::uint64_t guard) {
  const long long k = budget.value_or(default_budget(inst));
  const auto ctx = student_optimal_stable(inst);
  if (ctx.s() == 0) return trivial_result(inst, k, "formula", ctx);
  const auto best = min_envy_bruteforce(ctx, inst, guard);
  return from_realization(inst, k, "formula", best.count() + ctx.s(),
                          realize(ctx, inst, best.vector));
}

SolveResult solve_exact(const Instance& inst, std::optional<long long> budget,
                        const SearchOptions& options) {
  const long long k = budget.value_or(default_budget(inst));
  const auto bounds = useful_bounds(inst);
  const long long reach = std::min(k, full_useful_budget(inst));
  FirstMatch<Matching> search(options, [&](const CapacityVector& r) -> std::optional<Matching> {
    auto mu = deferred_acceptance(inst, r);
    if (mu.is_perfect()) return mu;
    return std::nullopt;
  });
  SolveResult result;
  result.method = "exact";
  for (long long total = 0; total <= reach; ++total) {
    for_each_vector_with_sum(bounds, total, [&](std::span<const int> r) {
      return search.offer(CapacityVector(std::vector<int>(r.begin(), r.end())));
    });
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

lp::Program LpModel::relaxation() const {
  lp::Program program;
  program.num_vars = num_vars();
  program.cost.assign(static_cast<std::size_t>(num_vars()), 0.0);
  const int offset = static_cast<int>(envy_vars.size());
  for (int i = 0; i < offset; ++i) program.cost[i] = 1.0;
  for (const auto& e : envy)
    program.constraints.push_back({{{e.envier, 1.0}, {offset + e.choice, -1.0}},
                                   lp::Sense::kGreaterEqual, 0.0});
  for (const auto& row : rows) {
    lp::Constraint con{{}, lp::Sense::kEqual, 1.0};
    for (int y : row) con.terms.emplace_back(offset + y, 1.0);
    program.constraints.push_back(std::move(con));
  }
  return program;
}

LpModel build_ip(const StableContext& ctx, const Instance& inst) {
  LpModel model;
  model.envy_vars = ctx.assigned;
  for (StudentId v : ctx.unassigned) {
    std::vector<int> row;
    for (SchoolId w : inst.preferences(v)) {
      const int y = static_cast<int>(model.choice_vars.size());
      model.choice_vars.push_back({v, w});
      row.push_back(y);
      for (std::size_t i = 0; i < ctx.assigned.size(); ++i) {
        const StudentId u = ctx.assigned[i];
        if (inst.prefers(u, w, ctx.matching[u]) && inst.ranks_higher(w, u, v))
          model.envy.push_back({static_cast<int>(i), y});
      }
    }
    model.rows.push_back(std::move(row));
  }
  return model;
}

IpSolution solve_ip(const LpModel& model, std::uint64_t guard) {
  std::uint64_t space = 1;
  for (const auto& row : model.rows) {
    space = row.size() > 0 && space > guard / row.size() ? guard + 1 : space * row.size();
  }
  if (space > guard)
    throw GuardExceeded("integer program enumeration exceeds guard " + std::to_string(guard));

  std::vector<std::vector<int>> enviers_of(model.choice_vars.size());
  for (const auto& e : model.envy) enviers_of[e.choice].push_back(e.envier);

  const std::size_t rows = model.rows.size();
  std::vector<std::size_t> digit(rows, 0);
  std::vector<int> mark(model.envy_vars.size(), 0);
  int stamp = 0;
  IpSolution best;
  bool have = false;
  while (true) {
    ++stamp;
    int value = 0;
    for (std::size_t r = 0; r < rows; ++r)
      for (int x : enviers_of[model.rows[r][digit[r]]])
        if (mark[x] != stamp) {
          mark[x] = stamp;
          ++value;
        }
    if (!have || value < best.value) {
      have = true;
      best.value = value;
      best.y.assign(model.choice_vars.size(), 0);
      best.x.assign(model.envy_vars.size(), 0);
      best.vector.choice.assign(rows, 0);
      for (std::size_t r = 0; r < rows; ++r) {
        const int y = model.rows[r][digit[r]];
        best.y[y] = 1;
        best.vector.choice[r] = model.choice_vars[y].school;
        for (int x : enviers_of[y]) best.x[x] = 1;
      }
      if (value == 0) break;
    }
    bool advanced = false;
    for (std::size_t r = rows; r-- > 0;) {
      if (++digit[r] < model.rows[r].size()) {
        advanced = true;
        break;
      }
      digit[r] = 0;
    }
    if (!advanced) break;
  }
  return best;
}

SolveResult solve_ip_method(const Instance& inst, std::optional<long long> budget,
                            std::uint64_t guard) {
  const long long k = budget.value_or(default_budget(inst));
  const auto ctx = student_optimal_stable(inst);
  if (ctx.s() == 0) return trivial_result(inst, k, "ip", ctx);
  const auto ip = solve_ip(build_ip(ctx, inst), guard);
  return from_realization(inst, k, "ip", ip.value + ctx.s(), realize(ctx, inst, ip.vector));
}

LpRounding round_lp(const StableContext& ctx, const Instance& inst) {
  const auto model = build_ip(ctx, inst);
  const auto program = model.relaxation();
  LpRounding out;
  out.lp = lp::solve(program);
  if (out.lp.status != lp::Status::kOptimal)
    throw Error(ErrorCode::kInternal, "LP relaxation did not reach an optimum");
  out.residual = lp::max_violation(program, out.lp.x);
  const std::size_t offset = model.envy_vars.size();
  const double threshold = 1.0 / std::max(1, ctx.delta_un) - lp::kTolerance;
  for (const auto& row : model.rows) {
    std::optional<int> pick;
    for (int y : row) {
      if (out.lp.x[offset + y] >= threshold) {
        pick = y;
        break;
      }
    }
    if (!pick) throw Error(ErrorCode::kInternal, "LP row has no entry above 1/Delta_un");
    out.vector.choice.push_back(model.choice_vars[*pick].school);
  }
  return out;
}

SolveResult solve_lp_round(const Instance& inst, std::optional<long long> budget) {
  const long long k = budget.value_or(default_budget(inst));
  const auto ctx = student_optimal_stable(inst);
  if (ctx.s() == 0) return trivial_result(inst, k, "lp-round", ctx);
  auto realization = realize(ctx, inst, round_lp(ctx, inst).vector);
  const long long cost = realization.normalized_envy + ctx.s();
  return from_realization(inst, k, "lp-round", cost, std::move(realization));
}

AssignmentVector greedy_vector(const StableContext& ctx, const Instance& inst) {
  AssignmentVector v;
  for (StudentId x : ctx.unassigned) {
    SchoolId best_school = -1;
    int best_count = 0;
    for (SchoolId w : inst.preferences(x)) {
      int count = 0;
      for (StudentId a : ctx.assigned)
        if (inst.prefers(a, w, ctx.matching[a]) && inst.ranks_higher(w, a, x)) ++count;
      if (best_school < 0 || count < best_count) {
        best_school = w;
        best_count = count;
      }
    }
    v.choice.push_back(best_school);
  }
  return v;
}

SolveResult solve_greedy(const Instance& inst, std::optional<long long> budget) {
  const long long k = budget.value_or(default_budget(inst));
  const auto ctx = student_optimal_stable(inst);
  if (ctx.s() == 0) return trivial_result(inst, k, "greedy", ctx);
  auto realization = realize(ctx, inst, greedy_vector(ctx, inst));
  const long long cost = realization.normalized_envy + ctx.s();
  return from_realization(inst, k, "greedy", cost, std::move(realization));
}

SolveResult solve_special_cases(const Instance& inst, std::optional<long long> budget) {
  const long long k = budget.value_or(default_budget(inst));
  const auto ctx = student_optimal_stable(inst);
  const auto stats = instance_stats(inst);
  if (ctx.s() == 0) return trivial_result(inst, k, "special-case", ctx);
  if (stats.max_priority_length > 2 && ctx.delta_un > 1) {
    SolveResult result;
    result.method = "special-case";
    result.status = SolveStatus::kNotApplicable;
    return result;
  }
  AssignmentVector first_choice;
  for (StudentId u : ctx.unassigned) first_choice.choice.push_back(inst.preferences(u).front());
  auto realization = realize(ctx, inst, first_choice);
  const long long seats = realization.increase.l1();
  return from_realization(inst, k, "special-case", seats, std::move(realization));
}

}  // namespace capmatch
