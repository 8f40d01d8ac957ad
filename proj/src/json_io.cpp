#include "capmatch/json_io.hpp"

#include <unordered_map>

namespace capmatch::io {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw InvalidInput(std::string("document is missing '") + key + "'");
  return doc.at(key);
}

std::string as_string(const Json& v, const char* what) {
  if (!v.is_string()) throw InvalidInput(std::string(what) + " must be a string");
  return v.get<std::string>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Instance parse_instance(std::string_view text) { return instance_from_json(parse_json(text)); }

Instance instance_from_json(const Json& doc) {
  InstanceSpec spec;
  const Json& students = require(doc, "students");
  const Json& schools = require(doc, "schools");
  const Json& prefs = require(doc, "preferences");
  const Json& prios = require(doc, "priorities");
  if (!students.is_array()) throw InvalidInput("'students' must be an array");
  if (!schools.is_array()) throw InvalidInput("'schools' must be an array");
  if (!prefs.is_object()) throw InvalidInput("'preferences' must be an object");
  if (!prios.is_object()) throw InvalidInput("'priorities' must be an object");

  for (const auto& s : students) spec.students.push_back(as_string(s, "student identifier"));
  for (const auto& s : schools) {
    spec.schools.push_back(as_string(require(s, "id"), "school identifier"));
    const Json& cap = require(s, "capacity");
    if (!cap.is_number_integer())
      throw InvalidInput("capacity of '" + spec.schools.back() + "' must be an integer");
    spec.capacities.push_back(cap.get<int>());
  }

  std::unordered_map<std::string, int> student_index;
  std::unordered_map<std::string, int> school_index;
  for (std::size_t i = 0; i < spec.students.size(); ++i)
    if (!student_index.emplace(spec.students[i], static_cast<int>(i)).second)
      throw InvalidInput("duplicate identifier '" + spec.students[i] + "'");
  for (std::size_t i = 0; i < spec.schools.size(); ++i)
    if (!school_index.emplace(spec.schools[i], static_cast<int>(i)).second)
      throw InvalidInput("duplicate identifier '" + spec.schools[i] + "'");

  spec.preferences.resize(spec.students.size());
  spec.priorities.resize(spec.schools.size());

  for (const auto& [name, list] : prefs.items()) {
    auto it = student_index.find(name);
    if (it == student_index.end())
      throw InvalidInput("preferences given for unknown student '" + name + "'");
    if (!list.is_array()) throw InvalidInput("preference list of '" + name + "' must be an array");
    for (const auto& entry : list) {
      const auto school = as_string(entry, "school identifier");
      auto w = school_index.find(school);
      if (w == school_index.end())
        throw InvalidInput("student '" + name + "' lists unknown school '" + school + "'");
      spec.preferences[it->second].push_back(w->second);
    }
  }
  for (const auto& [name, list] : prios.items()) {
    auto it = school_index.find(name);
    if (it == school_index.end())
      throw InvalidInput("priorities given for unknown school '" + name + "'");
    if (!list.is_array()) throw InvalidInput("priority list of '" + name + "' must be an array");
    for (const auto& entry : list) {
      const auto student = as_string(entry, "student identifier");
      auto u = student_index.find(student);
      if (u == student_index.end())
        throw InvalidInput("school '" + name + "' lists unknown student '" + student + "'");
      spec.priorities[it->second].push_back(u->second);
    }
  }
  return Instance(std::move(spec));
}

Json instance_to_json(const Instance& inst) {
  Json doc = Json::object();
  Json students = Json::array();
  for (const auto& s : inst.student_names()) students.push_back(s);
  Json schools = Json::array();
  for (SchoolId w = 0; w < inst.num_schools(); ++w) {
    Json entry = Json::object();
    entry["id"] = inst.school_name(w);
    entry["capacity"] = inst.capacity(w);
    schools.push_back(std::move(entry));
  }
  Json prefs = Json::object();
  for (StudentId u = 0; u < inst.num_students(); ++u) {
    Json list = Json::array();
    for (SchoolId w : inst.preferences(u)) list.push_back(inst.school_name(w));
    prefs[inst.student_name(u)] = std::move(list);
  }
  Json prios = Json::object();
  for (SchoolId w = 0; w < inst.num_schools(); ++w) {
    Json list = Json::array();
    for (StudentId u : inst.priorities(w)) list.push_back(inst.student_name(u));
    prios[inst.school_name(w)] = std::move(list);
  }
  doc["students"] = std::move(students);
  doc["schools"] = std::move(schools);
  doc["preferences"] = std::move(prefs);
  doc["priorities"] = std::move(prios);
  return doc;
}

std::string serialize_instance(const Instance& inst) { return dump(instance_to_json(inst)); }

Matching matching_from_json(const Instance& inst, const Json& doc) {
  const Json& assignment = require(doc, "assignment");
  if (!assignment.is_object()) throw InvalidInput("'assignment' must be an object");
  Matching mu(inst.num_students());
  for (const auto& [student, school] : assignment.items()) {
    const auto u = inst.find_student(student);
    if (!u) throw InvalidInput("matching references unknown student '" + student + "'");
    if (school.is_null()) continue;
    const auto name = as_string(school, "school identifier");
    const auto w = inst.find_school(name);
    if (!w) throw InvalidInput("matching references unknown school '" + name + "'");
    mu.assign(*u, *w);
  }
  validate_matching(inst, mu);
  return mu;
}

Json matching_to_json(const Instance& inst, const Matching& mu) {
  Json assignment = Json::object();
  for (StudentId u = 0; u < mu.num_students(); ++u)
    if (const auto w = mu[u]) assignment[inst.student_name(u)] = inst.school_name(*w);
  Json doc = Json::object();
  doc["assignment"] = std::move(assignment);
  return doc;
}

CapacityVector capacity_from_json(const Instance& inst, const Json& doc) {
  const Json& increase = require(doc, "increase");
  if (!increase.is_object()) throw InvalidInput("'increase' must be an object");
  CapacityVector r(inst.num_schools());
  for (const auto& [school, value] : increase.items()) {
    const auto w = inst.find_school(school);
    if (!w) throw InvalidInput("capacity vector references unknown school '" + school + "'");
    if (!value.is_number_integer())
      throw InvalidInput("increase of '" + school + "' must be an integer");
    r.set(*w, value.get<int>());
  }
  return r;
}

Json capacity_to_json(const Instance& inst, const CapacityVector& r) {
  Json increase = Json::object();
  for (SchoolId w = 0; w < inst.num_schools(); ++w) increase[inst.school_name(w)] = r[w];
  Json doc = Json::object();
  doc["increase"] = std::move(increase);
  return doc;
}

}  // namespace capmatch::io
