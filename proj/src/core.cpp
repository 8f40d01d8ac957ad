#include "capmatch/core.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace capmatch {

namespace {

void check_unique(const std::vector<std::string>& names, const char* kind,
                  std::unordered_set<std::string>& seen) {
  for (const auto& name : names) {
    if (name.empty()) throw InvalidInput(std::string("empty ") + kind + " identifier");
    if (!seen.insert(name).second)
      throw InvalidInput("duplicate identifier '" + name + "'");
  }
}

}  // namespace

Instance::Instance(InstanceSpec spec) : spec_(std::move(spec)) {
  const int n = num_students();
  const int m = num_schools();
  if (n == 0) throw InvalidInput("instance has no students");
  if (m == 0) throw InvalidInput("instance has no schools");
  if (static_cast<int>(spec_.capacities.size()) != m)
    throw InvalidInput("capacity count does not match school count");
  if (static_cast<int>(spec_.preferences.size()) != n)
    throw InvalidInput("preference list count does not match student count");
  if (static_cast<int>(spec_.priorities.size()) != m)
    throw InvalidInput("priority list count does not match school count");

  std::unordered_set<std::string> seen;
  check_unique(spec_.students, "student", seen);
  check_unique(spec_.schools, "school", seen);

  for (SchoolId w = 0; w < m; ++w) {
    if (spec_.capacities[w] < 1)
      throw InvalidInput("school '" + spec_.schools[w] + "' has capacity below one");
  }

  student_rank_.assign(static_cast<std::size_t>(n) * m, kUnacceptable);
  school_rank_.assign(static_cast<std::size_t>(m) * n, kUnacceptable);

  for (StudentId u = 0; u < n; ++u) {
    const auto& list = spec_.preferences[u];
    if (list.empty())
      throw InvalidInput("student '" + spec_.students[u] + "' has an empty preference list");
    for (std::size_t pos = 0; pos < list.size(); ++pos) {
      const SchoolId w = list[pos];
      if (w < 0 || w >= m)
        throw InvalidInput("student '" + spec_.students[u] + "' lists an unknown school");
      auto& slot = student_rank_[static_cast<std::size_t>(u) * m + w];
      if (slot != kUnacceptable)
        throw InvalidInput("student '" + spec_.students[u] + "' lists school '" +
                           spec_.schools[w] + "' twice");
      slot = static_cast<int>(pos);
    }
  }
  for (SchoolId w = 0; w < m; ++w) {
    const auto& list = spec_.priorities[w];
    if (list.empty())
      throw InvalidInput("school '" + spec_.schools[w] + "' has an empty priority list");
    for (std::size_t pos = 0; pos < list.size(); ++pos) {
      const StudentId u = list[pos];
      if (u < 0 || u >= n)
        throw InvalidInput("school '" + spec_.schools[w] + "' lists an unknown student");
      auto& slot = school_rank_[static_cast<std::size_t>(w) * n + u];
      if (slot != kUnacceptable)
        throw InvalidInput("school '" + spec_.schools[w] + "' lists student '" +
                           spec_.students[u] + "' twice");
      slot = static_cast<int>(pos);
    }
  }

  // Mutual acceptability.
  for (StudentId u = 0; u < n; ++u) {
    for (SchoolId w = 0; w < m; ++w) {
      const bool by_student = student_rank(u, w) != kUnacceptable;
      const bool by_school = school_rank(w, u) != kUnacceptable;
      if (by_student != by_school) {
        throw InvalidInput("acceptability is not mutual between student '" +
                           spec_.students[u] + "' and school '" + spec_.schools[w] + "'");
      }
    }
  }
}

std::optional<StudentId> Instance::find_student(std::string_view name) const {
  auto it = std::find(spec_.students.begin(), spec_.students.end(), name);
  if (it == spec_.students.end()) return std::nullopt;
  return static_cast<StudentId>(it - spec_.students.begin());
}

std::optional<SchoolId> Instance::find_school(std::string_view name) const {
  auto it = std::find(spec_.schools.begin(), spec_.schools.end(), name);
  if (it == spec_.schools.end()) return std::nullopt;
  return static_cast<SchoolId>(it - spec_.schools.begin());
}

InstanceStats instance_stats(const Instance& inst) {
  InstanceStats s;
  s.students = inst.num_students();
  s.schools = inst.num_schools();
  for (StudentId u = 0; u < s.students; ++u)
    s.max_preference_length =
        std::max(s.max_preference_length, static_cast<int>(inst.preferences(u).size()));
  for (SchoolId w = 0; w < s.schools; ++w) {
    s.max_priority_length =
        std::max(s.max_priority_length, static_cast<int>(inst.priorities(w).size()));
    s.total_capacity += inst.capacity(w);
  }
  return s;
}

CapacityVector::CapacityVector(std::vector<int> increase) : increase_(std::move(increase)) {
  for (int v : increase_)
    if (v < 0) throw InvalidInput("capacity increase must be nonnegative");
}

void CapacityVector::set(SchoolId w, int value) {
  if (value < 0) throw InvalidInput("capacity increase must be nonnegative");
  increase_[w] = value;
}

long long CapacityVector::l1() const {
  return std::accumulate(increase_.begin(), increase_.end(), 0LL);
}

int CapacityVector::linf() const {
  return increase_.empty() ? 0 : *std::max_element(increase_.begin(), increase_.end());
}

bool CapacityVector::dominated_by(const CapacityVector& other) const {
  if (other.size() != size()) return false;
  for (int i = 0; i < size(); ++i)
    if (increase_[i] > other.increase_[i]) return false;
  return true;
}

std::vector<int> effective_capacities(const Instance& inst, const CapacityVector& r) {
  std::vector<int> caps(inst.capacities().begin(), inst.capacities().end());
  for (SchoolId w = 0; w < inst.num_schools(); ++w) caps[w] += r[w];
  return caps;
}

bool Matching::is_perfect() const {
  return std::all_of(assignment_.begin(), assignment_.end(),
                     [](const auto& a) { return a.has_value(); });
}

int Matching::matched_count() const {
  return static_cast<int>(std::count_if(assignment_.begin(), assignment_.end(),
                                        [](const auto& a) { return a.has_value(); }));
}

std::vector<std::vector<StudentId>> Matching::by_school(int schools) const {
  std::vector<std::vector<StudentId>> out(static_cast<std::size_t>(schools));
  for (StudentId u = 0; u < num_students(); ++u)
    if (assignment_[u]) out[*assignment_[u]].push_back(u);
  return out;
}

std::vector<int> Matching::occupancy(int schools) const {
  std::vector<int> occ(static_cast<std::size_t>(schools), 0);
  for (const auto& a : assignment_)
    if (a) ++occ[*a];
  return occ;
}

void validate_matching(const Instance& inst, const Matching& mu) {
  if (mu.num_students() != inst.num_students())
    throw InvalidInput("matching does not cover the instance's students");
  for (StudentId u = 0; u < mu.num_students(); ++u) {
    const auto w = mu[u];
    if (!w) continue;
    if (*w < 0 || *w >= inst.num_schools())
      throw InvalidInput("matching references an unknown school");
    if (!inst.acceptable(u, *w))
      throw InvalidInput("student '" + inst.student_name(u) +
                         "' is assigned to unacceptable school '" + inst.school_name(*w) + "'");
  }
}

void validate_capacity_vector(const Instance& inst, const CapacityVector& r) {
  if (r.size() != inst.num_schools())
    throw InvalidInput("capacity vector dimension does not match school count");
}

bool is_feasible(const Instance& inst, const Matching& mu, const CapacityVector& r) {
  validate_capacity_vector(inst, r);
  if (mu.num_students() != inst.num_students())
    throw InvalidInput("matching does not cover the instance's students");
  for (StudentId u = 0; u < mu.num_students(); ++u) {
    const auto w = mu[u];
    if (!w) continue;
    if (*w < 0 || *w >= inst.num_schools())
      throw InvalidInput("matching references an unknown school");
    if (!inst.acceptable(u, *w)) return false;
  }
  const auto occ = mu.occupancy(inst.num_schools());
  for (SchoolId w = 0; w < inst.num_schools(); ++w)
    if (occ[w] > inst.capacity(w) + r[w]) return false;
  return true;
}

}  // namespace capmatch
