#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "capmatch/core.hpp"
#include "capmatch/deferred_acceptance.hpp"

namespace capmatch {

/// One acceptable school per initially-unassigned student. `choice[i]` belongs
/// to `ctx.unassigned[i]`.
struct AssignmentVector {
  std::vector<SchoolId> choice;
  friend bool operator==(const AssignmentVector&, const AssignmentVector&) = default;
};

struct EnvyReport {
  AssignmentVector vector;
  std::vector<StudentId> enviers;  // assigned students, document order
  int count() const { return static_cast<int>(enviers.size()); }
};

/// Throws InvalidInput unless v has one acceptable entry per unassigned student.
void validate_assignment_vector(const StableContext& ctx, const Instance& inst,
                                const AssignmentVector& v);

/// mu-hat with every unassigned student placed per v (may exceed capacities).
Matching place(const StableContext& ctx, const AssignmentVector& v);

/// Assigned students with justified envy towards some newly placed student.
EnvyReport envy_report(const StableContext& ctx, const Instance& inst, const AssignmentVector& v);

inline constexpr std::uint64_t kDefaultVectorGuard = 10'000'000;

/// Size of the vector space, saturating at UINT64_MAX.
std::uint64_t vector_space_size(const StableContext& ctx, const Instance& inst);

/// Visits every vector, ordering each student's options by school index and
/// treating the first unassigned student as most significant. Stops early
/// when the visitor returns false.
void for_each_assignment_vector(const StableContext& ctx, const Instance& inst,
                                const std::function<bool(const AssignmentVector&)>& visit);

/// Minimiser of the envier count; ties go to the lexicographically first vector.
EnvyReport min_envy_bruteforce(const StableContext& ctx, const Instance& inst,
                               std::uint64_t guard = kDefaultVectorGuard);

struct Realization {
  AssignmentVector normalized;  // v after removing envy among unassigned students
  int normalization_moves = 0;
  int normalized_envy = 0;      // envier count of the normalized vector
  Matching matching;
  CapacityVector increase;
};

/// Builds a stable perfect matching from v:
///  1. while an unassigned student justifiedly envies another, move the first
///     such student (document order) to the best school holding a student it
///     envies;
///  2. place the unassigned students;
///  3. move each envious assigned student to the best school holding a
///     student of lower priority, judged on the state after step 2;
///  4. set r[w] = max(0, occupancy - q[w]);
///  5. offer vacated seats: while a school is under-filled and some student
///     prefers it, admit the highest-priority such student and drop the seat
///     the move releases if it was an added one.
/// Step 5 only lowers r, so |r|_1 <= normalized_envy + |U_un|.
Realization realize(const StableContext& ctx, const Instance& inst, const AssignmentVector& v);

}  // namespace capmatch
