#pragma once

// Minimum total capacity increase for a stable perfect matching.

#include <cstdint>
#include <optional>
#include <vector>

#include "capmatch/core.hpp"
#include "capmatch/deferred_acceptance.hpp"
#include "capmatch/envy_vectors.hpp"
#include "capmatch/lp.hpp"
#include "capmatch/search.hpp"
#include "capmatch/solve_result.hpp"

namespace capmatch {

/// Sum of per-school useful increases; a budget that always suffices for the
/// stable-perfect and stable-efficient problems.
long long default_budget(const Instance& inst);

/// Lowest |r|_1 over assignment vectors: min n_je + |U_un|, realized on the
/// minimizing vector. The realized witness may need fewer seats than the
/// reported objective.
SolveResult solve_formula(const Instance& inst, std::optional<long long> budget = std::nullopt,
                          std::uint64_t guard = kDefaultVectorGuard);

/// Ground truth: capacity vectors by increasing |r|_1 (each school capped at
/// its useful increase, earlier schools first at equal norm) until deferred
/// acceptance is perfect.
SolveResult solve_exact(const Instance& inst, std::optional<long long> budget = std::nullopt,
                        const SearchOptions& options = {});

/// Integer program over the initially unassigned students: y picks one
/// school per unassigned student and x marks assigned students who envy a
/// choice. minimize sum x subject to x_u >= y_{v,w} per envy triple and
/// sum_w y_{v,w} = 1.
struct LpModel {
  struct ChoiceVar {
    StudentId student;
    SchoolId school;
  };
  struct EnvyConstraint {
    int envier;  // index into envy_vars
    int choice;  // index into choice_vars
  };
  std::vector<StudentId> envy_vars;         // x, one per assigned student
  std::vector<ChoiceVar> choice_vars;       // y
  std::vector<EnvyConstraint> envy;
  std::vector<std::vector<int>> rows;       // per unassigned student, preference order

  int num_vars() const { return static_cast<int>(envy_vars.size() + choice_vars.size()); }
  /// Variable layout: x first, then y.
  lp::Program relaxation() const;
};

LpModel build_ip(const StableContext& ctx, const Instance& inst);

struct IpSolution {
  int value = 0;
  std::vector<int> x;
  std::vector<int> y;
  AssignmentVector vector;  // the y rows as school choices
};

/// Exact optimum by enumerating one choice per row and deriving x.
IpSolution solve_ip(const LpModel& model, std::uint64_t guard = kDefaultVectorGuard);

SolveResult solve_ip_method(const Instance& inst, std::optional<long long> budget = std::nullopt,
                            std::uint64_t guard = kDefaultVectorGuard);

struct LpRounding {
  lp::Solution lp;
  double residual = 0.0;
  AssignmentVector vector;
};

/// LP relaxation of build_ip; each unassigned student takes the first school
/// in its list whose fractional value is at least 1/Delta_un.
LpRounding round_lp(const StableContext& ctx, const Instance& inst);

SolveResult solve_lp_round(const Instance& inst, std::optional<long long> budget = std::nullopt);

/// Each unassigned student independently takes the school creating the
/// fewest envious assigned students against mu-hat (first in its list on ties).
AssignmentVector greedy_vector(const StableContext& ctx, const Instance& inst);

SolveResult solve_greedy(const Instance& inst, std::optional<long long> budget = std::nullopt);

/// Polynomial cases: every priority list of length <= 2 (one seat per
/// unassigned student at its first choice), or every unassigned student
/// with a single acceptable school (the forced vector, realized). Returns
/// status kNotApplicable otherwise.
SolveResult solve_special_cases(const Instance& inst,
                                std::optional<long long> budget = std::nullopt);

}  // namespace capmatch
