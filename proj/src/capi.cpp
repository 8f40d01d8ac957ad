#include "capmatch/capmatch.h"

#include <cstring>
#include <map>
#include <set>
#include <string>

#include "capmatch/deferred_acceptance.hpp"
#include "capmatch/efficiency.hpp"
#include "capmatch/generators.hpp"
#include "capmatch/json_io.hpp"
#include "capmatch/minmax_sp.hpp"
#include "capmatch/minsum_sp.hpp"
#include "capmatch/se_solvers.hpp"

struct capmatch_instance {
  capmatch::Instance inst;
};

namespace {

using capmatch::io::Json;
namespace cm = capmatch;

thread_local std::string last_error;

char* copy_out(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

capmatch_status fail(capmatch_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class Fn>
capmatch_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const cm::GuardExceeded& e) {
    return fail(CAPMATCH_ERR_GUARD, e.what());
  } catch (const cm::InvalidInput& e) {
    return fail(CAPMATCH_ERR_INPUT, e.what());
  } catch (const cm::Error& e) {
    return fail(e.code() == cm::ErrorCode::kInvalidInput ? CAPMATCH_ERR_INPUT : CAPMATCH_ERR_INTERNAL,
                e.what());
  } catch (const Json::exception& e) {
    return fail(CAPMATCH_ERR_INPUT, std::string("malformed document: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(CAPMATCH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CAPMATCH_ERR_INTERNAL, e.what());
  }
}

cm::CapacityVector increase_or_zero(const cm::Instance& inst, const char* json) {
  if (!json) return cm::CapacityVector(inst.num_schools());
  return cm::io::capacity_from_json(inst, cm::io::parse_json(json));
}

std::string require_text(const char* s, const char* what) {
  if (!s) throw cm::InvalidInput(std::string(what) + " is required");
  return s;
}

// ---- source problems -------------------------------------------------------

int get_int(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_number_integer())
    throw cm::InvalidInput(std::string("parameter '") + key + "' must be an integer");
  return doc.at(key).get<int>();
}

int get_int_or(const Json& doc, const char* key, int fallback) {
  return doc.is_object() && doc.contains(key) ? get_int(doc, key) : fallback;
}

const Json& get_doc(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw cm::InvalidInput(std::string("parameter '") + key + "' is required");
  return doc.at(key);
}

std::string key_of(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

cm::gen::Graph parse_graph(const Json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.at("vertices").is_array())
    throw cm::InvalidInput("graph needs a 'vertices' list");
  cm::gen::Graph g;
  std::map<std::string, int> index;
  for (const auto& v : doc.at("vertices")) {
    if (!index.emplace(key_of(v), g.vertices).second) throw cm::InvalidInput("repeated vertex " + key_of(v));
    ++g.vertices;
  }
  if (doc.contains("edges")) {
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw cm::InvalidInput("each edge must be a pair");
      const auto a = index.find(key_of(e[0]));
      const auto b = index.find(key_of(e[1]));
      if (a == index.end() || b == index.end()) throw cm::InvalidInput("edge names an unknown vertex");
      g.edges.emplace_back(a->second, b->second);
    }
  }
  if (doc.contains("colors")) {
    for (const auto& c : doc.at("colors")) {
      if (!c.is_number_integer()) throw cm::InvalidInput("colors must be integers from 1");
      g.colors.push_back(c.get<int>() - 1);
    }
  }
  return g;
}

// A bare list of sets, or {"universe": n, "sets": [...]}. Elements count from 1.
cm::gen::SetSystem parse_sets(const Json& doc) {
  const Json& sets = doc.is_array() ? doc : doc.value("sets", Json());
  if (!sets.is_array()) throw cm::InvalidInput("set system needs a list of sets");
  cm::gen::SetSystem sys;
  for (const auto& s : sets) {
    if (!s.is_array()) throw cm::InvalidInput("each set must be a list of elements");
    std::vector<int> set;
    for (const auto& e : s) {
      if (!e.is_number_integer() || e.get<int>() < 1)
        throw cm::InvalidInput("set elements must be integers from 1");
      set.push_back(e.get<int>() - 1);
      sys.universe = std::max(sys.universe, e.get<int>());
    }
    sys.sets.push_back(std::move(set));
  }
  if (doc.is_object()) sys.universe = get_int_or(doc, "universe", sys.universe);
  return sys;
}

// A bare clause list, or {"clauses": [...], "variables": n}.
cm::gen::Formula parse_formula(const Json& doc) {
  const Json& clauses = doc.is_array() ? doc : doc.value("clauses", Json());
  if (!clauses.is_array()) throw cm::InvalidInput("formula needs a list of clauses");
  cm::gen::Formula f;
  for (const auto& c : clauses) {
    if (!c.is_array() || c.size() != 3) throw cm::InvalidInput("each clause needs three literals");
    std::array<int, 3> clause{};
    for (int k = 0; k < 3; ++k) {
      if (!c[k].is_number_integer()) throw cm::InvalidInput("literals must be signed integers");
      clause[k] = c[k].get<int>();
      f.variables = std::max(f.variables, std::abs(clause[k]));
    }
    f.clauses.push_back(clause);
  }
  if (doc.is_object()) f.variables = get_int_or(doc, "variables", f.variables);
  return f;
}

int color_count(const cm::gen::Graph& g, const Json& params) {
  int h = 0;
  for (int c : g.colors) h = std::max(h, c + 1);
  return get_int_or(params, "h", h);
}

std::pair<int, int> get_range(const Json& doc, const char* key, std::pair<int, int> fallback) {
  if (!doc.is_object() || !doc.contains(key)) return fallback;
  const auto& r = doc.at(key);
  if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
    throw cm::InvalidInput(std::string("parameter '") + key + "' must be [lo, hi]");
  return {r[0].get<int>(), r[1].get<int>()};
}

cm::gen::Generated generate(const std::string& name, const Json& params) {
  if (name == "intro" || name == "problems" || name == "stable-eff" || name == "minmaxse-gap")
    return {cm::gen::example(name), 0, std::nullopt};
  if (name == "greedy-tight") {
    const int s_hat = get_int_or(params, "s_hat", 2);
    const int n = get_int_or(params, "n", 3);
    return {cm::gen::greedy_tight(s_hat, n), static_cast<long long>(n) + s_hat, std::nullopt};
  }
  if (name == "vertex-cover")
    return cm::gen::vertex_cover(parse_graph(get_doc(params, "graph")), get_int(params, "h"));
  if (name == "set-cover") return cm::gen::set_cover(parse_sets(get_doc(params, "sets")), get_int(params, "k"));
  if (name == "mcc" || name == "se-mcc") {
    const auto g = parse_graph(get_doc(params, "graph"));
    const int h = color_count(g, params);
    return name == "mcc" ? cm::gen::mcc(g, h) : cm::gen::se_mcc(g, h);
  }
  if (name == "sat22")
    return cm::gen::sat22(parse_formula(get_doc(params, "formula")), get_int_or(params, "eta", 3));
  if (name == "random") {
    cm::gen::RandomParams p;
    p.students = get_int_or(params, "students", p.students);
    p.schools = get_int_or(params, "schools", p.schools);
    p.capacity = get_range(params, "capacity", p.capacity);
    p.preference_length = get_range(params, "preference_length", p.preference_length);
    if (params.is_object() && params.contains("seed")) {
      if (!params.at("seed").is_number_unsigned()) throw cm::InvalidInput("seed must be a non-negative integer");
      p.seed = params.at("seed").get<std::uint64_t>();
    }
    return {cm::gen::random_instance(p), 0, std::nullopt};
  }
  throw cm::InvalidInput("unknown generator '" + name + "'");
}

// ---- solving ---------------------------------------------------------------

const std::map<std::string, std::set<std::string>>& compatible_methods() {
  static const std::map<std::string, std::set<std::string>> table{
      {"minsum-sp", {"exact", "formula", "ip", "lp-round", "greedy", "auto"}},
      {"minmax-sp", {"uniform", "auto"}},
      {"minsum-se", {"exact", "auto"}},
      {"minmax-se", {"exact", "auto"}},
  };
  return table;
}

cm::SolveResult solve(const cm::Instance& inst, const capmatch_solve_options& o) {
  const std::string problem = require_text(o.problem, "problem");
  const std::string method = o.method ? o.method : "auto";
  const auto& table = compatible_methods();
  const auto row = table.find(problem);
  if (row == table.end()) throw cm::InvalidInput("unknown problem '" + problem + "'");
  if (!row->second.count(method))
    throw cm::InvalidInput("method '" + method + "' does not apply to " + problem);

  const std::optional<long long> budget = o.has_budget ? std::optional<long long>(o.budget) : std::nullopt;
  if (budget && *budget < 0) throw cm::InvalidInput("budget must be non-negative");
  cm::SearchOptions search;
  if (o.guard) search.guard = o.guard;
  search.threads = o.threads > 1 ? o.threads : 1;
  const std::uint64_t vector_guard = o.guard ? o.guard : cm::kDefaultVectorGuard;

  if (problem == "minsum-sp") {
    if (method == "formula") return cm::solve_formula(inst, budget, vector_guard);
    if (method == "ip") return cm::solve_ip_method(inst, budget, vector_guard);
    if (method == "lp-round") return cm::solve_lp_round(inst, budget);
    if (method == "greedy") return cm::solve_greedy(inst, budget);
    if (method == "auto") {
      auto special = cm::solve_special_cases(inst, budget);
      if (special.status != cm::SolveStatus::kNotApplicable) return special;
    }
    return cm::solve_exact(inst, budget, search);
  }
  if (problem == "minmax-sp") return cm::solve_minmax_sp(inst, budget);
  if (problem == "minsum-se") return cm::solve_minsum_se(inst, budget, search);
  return cm::solve_minmax_se(inst, budget, search);
}

Json names_of(const cm::Instance& inst, const std::vector<cm::StudentId>& ids) {
  Json out = Json::array();
  for (auto u : ids) out.push_back(inst.student_name(u));
  return out;
}

}  // namespace

extern "C" {

const char* capmatch_version(void) { return "1.0.0"; }

const char* capmatch_last_error(void) { return last_error.c_str(); }

void capmatch_string_free(char* text) { delete[] text; }

capmatch_status capmatch_instance_parse(const char* json, capmatch_instance** out) {
  return guarded([&] {
    if (!out) throw cm::InvalidInput("output handle is required");
    auto inst = cm::io::parse_instance(require_text(json, "instance document"));
    *out = new capmatch_instance{std::move(inst)};
    return CAPMATCH_OK;
  });
}

void capmatch_instance_free(capmatch_instance* inst) { delete inst; }

capmatch_status capmatch_instance_to_json(const capmatch_instance* inst, char** out) {
  return guarded([&] {
    if (!inst || !out) throw cm::InvalidInput("instance and output are required");
    *out = copy_out(cm::io::serialize_instance(inst->inst));
    return CAPMATCH_OK;
  });
}

capmatch_status capmatch_instance_stats(const capmatch_instance* inst, capmatch_stats* out) {
  return guarded([&] {
    if (!inst || !out) throw cm::InvalidInput("instance and output are required");
    const auto s = cm::instance_stats(inst->inst);
    const auto ctx = cm::student_optimal_stable(inst->inst);
    *out = capmatch_stats{s.students, s.schools, s.max_preference_length, s.max_priority_length,
                          s.total_capacity, ctx.s(), ctx.delta_un};
    return CAPMATCH_OK;
  });
}

capmatch_status capmatch_stable(const capmatch_instance* inst, const char* increase_json, char** out) {
  return guarded([&] {
    if (!inst || !out) throw cm::InvalidInput("instance and output are required");
    const auto r = increase_or_zero(inst->inst, increase_json);
    const auto ctx = cm::student_optimal_stable(inst->inst, r);
    Json doc;
    doc["matching"] = cm::io::matching_to_json(inst->inst, ctx.matching)["assignment"];
    doc["unassigned"] = names_of(inst->inst, ctx.unassigned);
    doc["increase"] = cm::io::capacity_to_json(inst->inst, r)["increase"];
    *out = copy_out(cm::io::dump(doc));
    return CAPMATCH_OK;
  });
}

capmatch_status capmatch_check(const capmatch_instance* inst, const char* matching_json,
                               const char* increase_json, const char* what, char** out) {
  return guarded([&] {
    if (!inst || !out) throw cm::InvalidInput("instance and output are required");
    const std::string w = what ? what : "all";
    if (w != "stability" && w != "perfect" && w != "efficient" && w != "all")
      throw cm::InvalidInput("check target must be stability, perfect, efficient or all");
    const auto& I = inst->inst;
    const auto mu = cm::io::matching_from_json(I, cm::io::parse_json(require_text(matching_json, "matching")));
    const auto r = increase_or_zero(I, increase_json);
    cm::validate_matching(I, mu);
    Json doc;
    doc["feasible"] = cm::is_feasible(I, mu, r);
    if (!doc["feasible"].get<bool>())
      throw cm::InvalidInput("matching is infeasible under the given capacities");
    if (w == "stability" || w == "all") {
      Json pairs = Json::array();
      for (const auto& bp : cm::blocking_pairs(I, mu, r))
        pairs.push_back({I.student_name(bp.student), I.school_name(bp.school)});
      doc["stable"] = pairs.empty();
      doc["blocking_pairs"] = std::move(pairs);
    }
    if (w == "perfect" || w == "all") {
      std::vector<cm::StudentId> unmatched;
      for (cm::StudentId u = 0; u < I.num_students(); ++u)
        if (!mu.is_matched(u)) unmatched.push_back(u);
      doc["perfect"] = unmatched.empty();
      doc["unmatched"] = names_of(I, unmatched);
    }
    if (w == "efficient" || w == "all") {
      const auto verdict = cm::is_efficient(I, mu, r);
      doc["efficient"] = verdict.efficient;
      doc["dominated_by"] = verdict.witness
                                ? cm::io::matching_to_json(I, *verdict.witness)["assignment"]
                                : Json(nullptr);
    }
    *out = copy_out(cm::io::dump(doc));
    return CAPMATCH_OK;
  });
}

capmatch_status capmatch_solve(const capmatch_instance* inst, const capmatch_solve_options* options,
                               char** out) {
  return guarded([&] {
    if (!inst || !options || !out) throw cm::InvalidInput("instance, options and output are required");
    const auto result = solve(inst->inst, *options);
    *out = copy_out(cm::io::dump(cm::result_to_json(inst->inst, result)));
    return result.feasible() ? CAPMATCH_OK : CAPMATCH_INFEASIBLE;
  });
}

capmatch_status capmatch_generate(const char* name, const char* params_json, char** out,
                                  long long* budget, long long* max_budget) {
  return guarded([&] {
    if (!out) throw cm::InvalidInput("output is required");
    const Json params = params_json ? cm::io::parse_json(params_json) : Json::object();
    const std::string n = require_text(name, "generator name");
    const auto generated = generate(n, params);
    const bool fixes_budget = n != "intro" && n != "problems" && n != "stable-eff" &&
                              n != "minmaxse-gap" && n != "random";
    *out = copy_out(cm::io::serialize_instance(generated.instance));
    if (budget) *budget = fixes_budget ? generated.budget : -1;
    if (max_budget) *max_budget = generated.max_budget.value_or(-1);
    return CAPMATCH_OK;
  });
}

capmatch_status capmatch_oracle(const capmatch_instance* inst, const char* what,
                                const char* increase_json, const char* matching_json,
                                unsigned long long guard, char** out) {
  return guarded([&] {
    if (!inst || !out) throw cm::InvalidInput("instance and output are required");
    const std::string w = require_text(what, "oracle target");
    const auto& I = inst->inst;
    const auto r = increase_or_zero(I, increase_json);
    Json doc;
    if (w == "enumerate-stable") {
      const auto all = cm::enumerate_stable_matchings(
          I, r, SIZE_MAX, guard ? guard : cm::kDefaultStableEnumerationGuard);
      Json list = Json::array();
      std::optional<std::vector<bool>> matched;
      bool same_set = true;
      for (const auto& mu : all) {
        list.push_back(cm::io::matching_to_json(I, mu)["assignment"]);
        std::vector<bool> here(static_cast<std::size_t>(I.num_students()));
        for (cm::StudentId u = 0; u < I.num_students(); ++u) here[u] = mu.is_matched(u);
        if (matched && *matched != here) same_set = false;
        if (!matched) matched = here;
      }
      doc["count"] = all.size();
      doc["matchings"] = std::move(list);
      doc["same_matched_students"] = same_set;
    } else if (w == "efficiency") {
      const auto mu = matching_json
                          ? cm::io::matching_from_json(I, cm::io::parse_json(matching_json))
                          : cm::deferred_acceptance(I, r);
      const bool oracle =
          cm::efficiency_oracle(I, mu, r, guard ? guard : cm::kDefaultEfficiencyOracleGuard);
      doc["matching"] = cm::io::matching_to_json(I, mu)["assignment"];
      doc["efficient"] = oracle;
      doc["checker_agrees"] = cm::is_efficient(I, mu, r).efficient == oracle;
    } else {
      throw cm::InvalidInput("oracle target must be enumerate-stable or efficiency");
    }
    *out = copy_out(cm::io::dump(doc));
    return CAPMATCH_OK;
  });
}

}  // extern "C"
