#include "capmatch/envy_vectors.hpp"

#include <algorithm>
#include <string>

namespace capmatch {

void validate_assignment_vector(const StableContext& ctx, const Instance& inst,
                                const AssignmentVector& v) {
  if (v.choice.size() != ctx.unassigned.size())
    throw InvalidInput("assignment vector must have one entry per unassigned student");
  for (std::size_t i = 0; i < v.choice.size(); ++i) {
    const SchoolId w = v.choice[i];
    if (w < 0 || w >= inst.num_schools() || !inst.acceptable(ctx.unassigned[i], w))
      throw InvalidInput("assignment vector gives student '" +
                         inst.student_name(ctx.unassigned[i]) + "' an unacceptable school");
  }
}

Matching place(const StableContext& ctx, const AssignmentVector& v) {
  Matching mu = ctx.matching;
  for (std::size_t i = 0; i < ctx.unassigned.size(); ++i) mu.assign(ctx.unassigned[i], v.choice[i]);
  return mu;
}

namespace {

// Assigned students envying some placed student; no validation.
std::vector<StudentId> enviers_of(const StableContext& ctx, const Instance& inst,
                                  std::span<const SchoolId> choice) {
  std::vector<StudentId> out;
  for (StudentId a : ctx.assigned) {
    const auto own = ctx.matching[a];
    for (std::size_t i = 0; i < choice.size(); ++i) {
      const SchoolId w = choice[i];
      if (inst.prefers(a, w, own) && inst.ranks_higher(w, a, ctx.unassigned[i])) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

// Best school u strictly prefers to `own` that holds a student u outranks there.
std::optional<SchoolId> best_school_with_lower_student(
    const Instance& inst, StudentId u, const std::vector<std::vector<StudentId>>& members,
    std::optional<SchoolId> own) {
  for (SchoolId w : inst.preferences(u)) {
    if (own && *own == w) return std::nullopt;
    for (StudentId y : members[w])
      if (y != u && inst.ranks_higher(w, u, y)) return w;
  }
  return std::nullopt;
}

}  // namespace

EnvyReport envy_report(const StableContext& ctx, const Instance& inst, const AssignmentVector& v) {
  validate_assignment_vector(ctx, inst, v);
  return {v, enviers_of(ctx, inst, v.choice)};
}

std::uint64_t vector_space_size(const StableContext& ctx, const Instance& inst) {
  std::uint64_t total = 1;
  for (StudentId u : ctx.unassigned) {
    const std::uint64_t options = inst.preferences(u).size();
    if (total > UINT64_MAX / options) return UINT64_MAX;
    total *= options;
  }
  return total;
}

void for_each_assignment_vector(const StableContext& ctx, const Instance& inst,
                                const std::function<bool(const AssignmentVector&)>& visit) {
  const std::size_t s = ctx.unassigned.size();
  std::vector<std::vector<SchoolId>> options(s);
  for (std::size_t i = 0; i < s; ++i) {
    const auto prefs = inst.preferences(ctx.unassigned[i]);
    options[i].assign(prefs.begin(), prefs.end());
    std::sort(options[i].begin(), options[i].end());
  }
  std::vector<std::size_t> digit(s, 0);
  AssignmentVector v;
  v.choice.resize(s);
  for (std::size_t i = 0; i < s; ++i) v.choice[i] = options[i][0];
  while (true) {
    if (!visit(v)) return;
    // Odometer with the last coordinate varying fastest.
    std::size_t i = s;
    while (i > 0) {
      --i;
      if (++digit[i] < options[i].size()) {
        v.choice[i] = options[i][digit[i]];
        break;
      }
      digit[i] = 0;
      v.choice[i] = options[i][0];
      if (i == 0) return;
    }
    if (s == 0) return;
  }
}

EnvyReport min_envy_bruteforce(const StableContext& ctx, const Instance& inst,
                               std::uint64_t guard) {
  const auto space = vector_space_size(ctx, inst);
  if (space > guard)
    throw GuardExceeded("assignment-vector scan needs " + std::to_string(space) +
                        " vectors, guard is " + std::to_string(guard));
  EnvyReport best;
  bool have = false;
  for_each_assignment_vector(ctx, inst, [&](const AssignmentVector& v) {
    auto enviers = enviers_of(ctx, inst, v.choice);
    if (!have || enviers.size() < best.enviers.size()) {
      best = {v, std::move(enviers)};
      have = true;
    }
    return best.count() > 0;
  });
  return best;
}

Realization realize(const StableContext& ctx, const Instance& inst, const AssignmentVector& v) {
  validate_assignment_vector(ctx, inst, v);
  const int m = inst.num_schools();
  const std::size_t s = ctx.unassigned.size();

  Realization out;
  out.normalized = v;
  auto& choice = out.normalized.choice;

  // Step 1: remove justified envy among the unassigned students.
  const std::size_t max_moves = s;
  while (true) {
    const Matching current = place(ctx, out.normalized);
    const auto members = current.by_school(m);
    bool moved = false;
    for (std::size_t i = 0; i < s && !moved; ++i) {
      const StudentId x = ctx.unassigned[i];
      if (auto target = best_school_with_lower_student(inst, x, members, choice[i])) {
        choice[i] = *target;
        moved = true;
      }
    }
    if (!moved) break;
    if (static_cast<std::size_t>(++out.normalization_moves) > max_moves)
      throw Error(ErrorCode::kInternal, "normalization did not terminate within |U_un| moves");
  }

  // Step 2.
  Matching mu = place(ctx, out.normalized);
  const auto enviers = enviers_of(ctx, inst, choice);
  out.normalized_envy = static_cast<int>(enviers.size());

  // Step 3, all targets judged on the post-placement state.
  {
    const auto members = mu.by_school(m);
    std::vector<std::pair<StudentId, SchoolId>> moves;
    for (StudentId a : enviers) {
      auto target = best_school_with_lower_student(inst, a, members, ctx.matching[a]);
      if (!target) throw Error(ErrorCode::kInternal, "envious student has no target school");
      moves.emplace_back(a, *target);
    }
    for (auto [a, w] : moves) mu.assign(a, w);
  }

  // Step 4.
  auto occ = mu.occupancy(m);
  std::vector<int> extra(static_cast<std::size_t>(m), 0);
  for (SchoolId w = 0; w < m; ++w) extra[w] = std::max(0, occ[w] - inst.capacity(w));

  // Step 5: vacancy chains. Each move strictly improves one student.
  bool changed = true;
  while (changed) {
    changed = false;
    for (SchoolId w = 0; w < m; ++w) {
      if (occ[w] >= inst.capacity(w) + extra[w]) continue;
      std::optional<StudentId> pick;
      for (StudentId u : inst.priorities(w)) {
        if (inst.prefers(u, w, mu[u])) {
          pick = u;
          break;
        }
      }
      if (!pick) continue;
      const auto old = mu[*pick];
      mu.assign(*pick, w);
      ++occ[w];
      if (old) {
        --occ[*old];
        extra[*old] = std::max(0, occ[*old] - inst.capacity(*old));
      }
      changed = true;
    }
  }

  out.increase = CapacityVector(std::move(extra));
  if (!mu.is_perfect() || !is_stable(inst, mu, out.increase))
    throw Error(ErrorCode::kInternal, "realized matching is not stable and perfect");
  out.matching = std::move(mu);
  return out;
}

}  // namespace capmatch
