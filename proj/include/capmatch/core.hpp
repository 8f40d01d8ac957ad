#pragma once

// Instance model for many-to-one matching with capacity increases.
//
// Students and schools are addressed by dense indices in document order.
// Identifiers are kept only for I/O.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace capmatch {

using StudentId = int;
using SchoolId = int;

/// Rank value stored for an unacceptable partner.
inline constexpr int kUnacceptable = std::numeric_limits<int>::max();

enum class ErrorCode {
  kInvalidInput = 1,
  kGuardExceeded = 3,
  kInternal = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorCode::kInvalidInput, what) {}
};

class GuardExceeded : public Error {
 public:
  explicit GuardExceeded(const std::string& what)
      : Error(ErrorCode::kGuardExceeded, what) {}
};

/// Raw, unvalidated instance content. Lists hold indices into the id vectors.
struct InstanceSpec {
  std::vector<std::string> students;
  std::vector<std::string> schools;
  std::vector<int> capacities;
  std::vector<std::vector<SchoolId>> preferences;  // per student, best first
  std::vector<std::vector<StudentId>> priorities;  // per school, best first
};

/// Validated, immutable instance. Construction checks every structural
/// invariant and precomputes both rank tables.
class Instance {
 public:
  explicit Instance(InstanceSpec spec);

  int num_students() const { return static_cast<int>(spec_.students.size()); }
  int num_schools() const { return static_cast<int>(spec_.schools.size()); }

  const std::string& student_name(StudentId u) const { return spec_.students[u]; }
  const std::string& school_name(SchoolId w) const { return spec_.schools[w]; }
  std::span<const std::string> student_names() const { return spec_.students; }
  std::span<const std::string> school_names() const { return spec_.schools; }

  std::optional<StudentId> find_student(std::string_view name) const;
  std::optional<SchoolId> find_school(std::string_view name) const;

  int capacity(SchoolId w) const { return spec_.capacities[w]; }
  std::span<const int> capacities() const { return spec_.capacities; }

  std::span<const SchoolId> preferences(StudentId u) const { return spec_.preferences[u]; }
  std::span<const StudentId> priorities(SchoolId w) const { return spec_.priorities[w]; }

  /// Position of w in u's list (0 = best), or kUnacceptable.
  int student_rank(StudentId u, SchoolId w) const {
    return student_rank_[static_cast<std::size_t>(u) * num_schools() + w];
  }
  /// Position of u in w's list (0 = best), or kUnacceptable.
  int school_rank(SchoolId w, StudentId u) const {
    return school_rank_[static_cast<std::size_t>(w) * num_students() + u];
  }
  bool acceptable(StudentId u, SchoolId w) const {
    return student_rank(u, w) != kUnacceptable;
  }
  /// u strictly prefers a to b; b may be unmatched.
  bool prefers(StudentId u, SchoolId a, std::optional<SchoolId> b) const {
    if (!b) return acceptable(u, a);
    return student_rank(u, a) < student_rank(u, *b);
  }
  /// w ranks a above b.
  bool ranks_higher(SchoolId w, StudentId a, StudentId b) const {
    return school_rank(w, a) < school_rank(w, b);
  }

  /// Seats beyond the priority-list length can never be filled.
  int useful_increase(SchoolId w) const {
    const int listed = static_cast<int>(spec_.priorities[w].size());
    return listed > capacity(w) ? listed - capacity(w) : 0;
  }

  const InstanceSpec& spec() const { return spec_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.spec_.students == b.spec_.students && a.spec_.schools == b.spec_.schools &&
           a.spec_.capacities == b.spec_.capacities &&
           a.spec_.preferences == b.spec_.preferences &&
           a.spec_.priorities == b.spec_.priorities;
  }

 private:
  InstanceSpec spec_;
  std::vector<int> student_rank_;
  std::vector<int> school_rank_;
};

struct InstanceStats {
  int students = 0;
  int schools = 0;
  int max_preference_length = 0;  // longest student list
  int max_priority_length = 0;    // longest school list
  long long total_capacity = 0;
};

InstanceStats instance_stats(const Instance& inst);

/// Per-school nonnegative capacity increase.
class CapacityVector {
 public:
  CapacityVector() = default;
  explicit CapacityVector(int schools) : increase_(static_cast<std::size_t>(schools), 0) {}
  explicit CapacityVector(std::vector<int> increase);

  static CapacityVector uniform(int schools, int level) {
    return CapacityVector(std::vector<int>(static_cast<std::size_t>(schools), level));
  }

  int size() const { return static_cast<int>(increase_.size()); }
  int operator[](SchoolId w) const { return increase_[w]; }
  void set(SchoolId w, int value);
  std::span<const int> values() const { return increase_; }

  long long l1() const;
  int linf() const;
  /// Componentwise <=.
  bool dominated_by(const CapacityVector& other) const;

  friend bool operator==(const CapacityVector&, const CapacityVector&) = default;

 private:
  std::vector<int> increase_;
};

/// Effective capacities q + r.
std::vector<int> effective_capacities(const Instance& inst, const CapacityVector& r);

/// Partial assignment of students to schools. Unmatched students hold no value.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int students) : assignment_(static_cast<std::size_t>(students)) {}

  int num_students() const { return static_cast<int>(assignment_.size()); }
  std::optional<SchoolId> operator[](StudentId u) const { return assignment_[u]; }
  void assign(StudentId u, SchoolId w) { assignment_[u] = w; }
  void unassign(StudentId u) { assignment_[u].reset(); }

  bool is_matched(StudentId u) const { return assignment_[u].has_value(); }
  bool is_perfect() const;
  int matched_count() const;
  /// Students assigned to each school, in student order.
  std::vector<std::vector<StudentId>> by_school(int schools) const;
  std::vector<int> occupancy(int schools) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<std::optional<SchoolId>> assignment_;
};

/// Throws InvalidInput if the matching or vector does not fit the instance or
/// assigns a student to an unacceptable school.
void validate_matching(const Instance& inst, const Matching& mu);
void validate_capacity_vector(const Instance& inst, const CapacityVector& r);

/// Every assignment acceptable and |mu^-1(w)| <= q[w] + r[w] for all w.
bool is_feasible(const Instance& inst, const Matching& mu, const CapacityVector& r);

}  // namespace capmatch
