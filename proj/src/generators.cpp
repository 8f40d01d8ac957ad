#include "capmatch/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace capmatch::gen {

namespace {

using Names = std::vector<std::string>;

std::string idx(int i) { return std::to_string(i + 1); }

class Builder {
 public:
  void student(std::string name, Names prefs) {
    students_.push_back(std::move(name));
    prefs_.push_back(std::move(prefs));
  }
  void school(std::string name, Names prios, int capacity = 1) {
    schools_.push_back(std::move(name));
    prios_.push_back(std::move(prios));
    caps_.push_back(capacity);
  }

  Instance build() const {
    std::map<std::string, int> sid, wid;
    for (std::size_t i = 0; i < students_.size(); ++i) sid[students_[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < schools_.size(); ++i) wid[schools_[i]] = static_cast<int>(i);
    InstanceSpec spec;
    spec.students = students_;
    spec.schools = schools_;
    spec.capacities = caps_;
    for (const auto& list : prefs_) spec.preferences.push_back(resolve(wid, list));
    for (const auto& list : prios_) spec.priorities.push_back(resolve(sid, list));
    return Instance(std::move(spec));
  }

 private:
  static std::vector<int> resolve(const std::map<std::string, int>& ids, const Names& names) {
    std::vector<int> out;
    for (const auto& n : names) {
      const auto it = ids.find(n);
      if (it == ids.end()) throw Error(ErrorCode::kInternal, "generator referenced unknown '" + n + "'");
      out.push_back(it->second);
    }
    return out;
  }

  Names students_, schools_;
  std::vector<Names> prefs_, prios_;
  std::vector<int> caps_;
};

// Resolves named assignments and increases against a generated instance.
class WitnessBuilder {
 public:
  explicit WitnessBuilder(const Instance& inst)
      : inst_(inst), mu_(inst.num_students()), r_(inst.num_schools()) {}

  void match(const std::string& student, const std::string& school) {
    mu_.assign(lookup_student(student), lookup_school(school));
  }
  void raise(const std::string& school, int amount) { r_.set(lookup_school(school), amount); }
  /// r[w] = max(0, occupancy - q[w]) everywhere.
  void raise_to_occupancy() {
    const auto occ = mu_.occupancy(inst_.num_schools());
    for (SchoolId w = 0; w < inst_.num_schools(); ++w)
      r_.set(w, std::max(0, occ[w] - inst_.capacity(w)));
  }
  Witness done() { return {std::move(r_), std::move(mu_)}; }

 private:
  StudentId lookup_student(const std::string& name) const {
    if (auto u = inst_.find_student(name)) return *u;
    throw InvalidInput("witness refers to unknown student '" + name + "'");
  }
  SchoolId lookup_school(const std::string& name) const {
    if (auto w = inst_.find_school(name)) return *w;
    throw InvalidInput("witness refers to unknown school '" + name + "'");
  }

  const Instance& inst_;
  Matching mu_;
  CapacityVector r_;
};

void check_graph(const Graph& g) {
  if (g.vertices < 1) throw InvalidInput("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.vertices || b >= g.vertices)
      throw InvalidInput("edge endpoint out of range");
    if (a == b) throw InvalidInput("graph must not contain loops");
    if (!seen.insert(std::minmax(a, b)).second) throw InvalidInput("graph must not repeat an edge");
  }
}

void check_coloring(const Graph& g, int h) {
  if (h < 2) throw InvalidInput("clique encodings need at least two colors");
  if (static_cast<int>(g.colors.size()) != g.vertices)
    throw InvalidInput("coloring must give one color per vertex");
  for (int c : g.colors)
    if (c < 0 || c >= h) throw InvalidInput("vertex color out of range");
}

std::vector<std::pair<int, int>> color_pairs(int h) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < h; ++a)
    for (int b = a + 1; b < h; ++b) out.emplace_back(a, b);
  return out;
}

std::string pair_tag(std::pair<int, int> p) { return idx(p.first) + "_" + idx(p.second); }

// Edges whose endpoints carry exactly the colors of p, in index order.
std::vector<int> edges_of_pair(const Graph& g, std::pair<int, int> p) {
  std::vector<int> out;
  for (std::size_t t = 0; t < g.edges.size(); ++t) {
    auto [a, b] = std::minmax(g.colors[g.edges[t].first], g.colors[g.edges[t].second]);
    if (a == p.first && b == p.second) out.push_back(static_cast<int>(t));
  }
  return out;
}

// Shared by the two clique encodings: edge schools/students and vertex
// schools/students. `selector_of_edge[t]` names the selector ranked last at
// e_t, if any.
void add_clique_core(Builder& b, const Graph& g, const Names& selector_of_edge) {
  for (std::size_t t = 0; t < g.edges.size(); ++t)
    b.student("f" + idx(static_cast<int>(t)), {"e" + idx(static_cast<int>(t))});
  for (int i = 0; i < g.vertices; ++i) {
    Names prefs;
    for (std::size_t t = 0; t < g.edges.size(); ++t)
      if (g.edges[t].first == i || g.edges[t].second == i) prefs.push_back("e" + idx(static_cast<int>(t)));
    prefs.push_back("w" + idx(i));
    b.student("v" + idx(i), prefs);
  }
  for (std::size_t t = 0; t < g.edges.size(); ++t) {
    auto [lo, hi] = std::minmax(g.edges[t].first, g.edges[t].second);
    Names prios{"f" + idx(static_cast<int>(t)), "v" + idx(lo), "v" + idx(hi)};
    if (!selector_of_edge[t].empty()) prios.push_back(selector_of_edge[t]);
    b.school("e" + idx(static_cast<int>(t)), prios);
  }
  for (int i = 0; i < g.vertices; ++i) b.school("w" + idx(i), {"v" + idx(i)});
}

Names selectors_by_edge(const Graph& g, int h) {
  Names out(g.edges.size());
  for (auto p : color_pairs(h))
    for (int t : edges_of_pair(g, p)) out[t] = "s" + pair_tag(p);
  return out;
}

void check_pairs_covered(const Graph& g, int h) {
  for (auto p : color_pairs(h))
    if (edges_of_pair(g, p).empty())
      throw InvalidInput("color pair " + pair_tag(p) +
                         " has no edge, so its selector would have an empty list");
}

void clique_witness_core(WitnessBuilder& wb, const Graph& g, int h, std::span<const int> clique) {
  if (static_cast<int>(clique.size()) != h) throw InvalidInput("clique must list one vertex per color");
  std::vector<char> in_clique(static_cast<std::size_t>(g.vertices), 0);
  for (int c = 0; c < h; ++c) {
    const int v = clique[c];
    if (v < 0 || v >= g.vertices || g.colors[v] != c)
      throw InvalidInput("clique vertex has the wrong color");
    in_clique[v] = 1;
  }
  std::vector<int> clique_edges;
  for (std::size_t t = 0; t < g.edges.size(); ++t)
    if (in_clique[g.edges[t].first] && in_clique[g.edges[t].second])
      clique_edges.push_back(static_cast<int>(t));
  if (static_cast<int>(clique_edges.size()) != h * (h - 1) / 2)
    throw InvalidInput("vertices do not form a multicolored clique");

  for (std::size_t t = 0; t < g.edges.size(); ++t)
    wb.match("f" + idx(static_cast<int>(t)), "e" + idx(static_cast<int>(t)));
  for (int i = 0; i < g.vertices; ++i) {
    std::string target = "w" + idx(i);
    if (in_clique[i]) {
      for (int t : clique_edges) {
        if (g.edges[t].first == i || g.edges[t].second == i) {
          target = "e" + idx(t);
          break;
        }
      }
    }
    wb.match("v" + idx(i), target);
  }
  for (int t : clique_edges) {
    auto [a, b] = std::minmax(g.colors[g.edges[t].first], g.colors[g.edges[t].second]);
    wb.match("s" + pair_tag({a, b}), "e" + idx(t));
  }
}

// Stable-eff preferences; `prefix` names the copy, `fifth` the fifth student,
// `fifth_extra` schools the fifth student ranks before the gadget's own.
void add_stable_eff(Builder& b, const std::string& prefix, const std::string& fifth,
                    const Names& fifth_extra) {
  auto w = [&](int k) { return prefix + "w" + std::to_string(k); };
  auto u = [&](int k) { return k == 5 ? fifth : prefix + "u" + std::to_string(k); };
  b.student(u(1), {w(1), w(3), w(4)});
  b.student(u(2), {w(1), w(2)});
  b.student(u(3), {w(2), w(1), w(3)});
  b.student(u(4), {w(2), w(3), w(5)});
  Names fifth_prefs = fifth_extra;
  for (const auto& s : {w(3), w(2), w(1)}) fifth_prefs.push_back(s);
  b.student(u(5), fifth_prefs);
  b.school(w(1), {u(5), u(3), u(2), u(1)});
  b.school(w(2), {u(2), u(5), u(3), u(4)});
  b.school(w(3), {u(3), u(4), u(1), u(5)});
  b.school(w(4), {u(1)});
  b.school(w(5), {u(4)});
}

}  // namespace

Instance intro() {
  Builder b;
  b.student("u1", {"w1", "w3", "w2"});
  b.student("u2", {"w2", "w1", "w3"});
  b.student("u3", {"w2", "w3"});
  b.student("u4", {"w1", "w2"});
  b.student("u5", {"w1", "w2"});
  b.school("w1", {"u2", "u4", "u1", "u5"});
  b.school("w2", {"u1", "u2", "u3", "u4", "u5"});
  b.school("w3", {"u3", "u1", "u2"});
  return b.build();
}

Instance problems() {
  Builder b;
  for (int i = 1; i <= 5; ++i) {
    Names prefs{"w1", "w2"};
    if (i == 3) prefs.push_back("w3");
    b.student("u" + std::to_string(i), prefs);
  }
  const Names all{"u1", "u2", "u3", "u4", "u5"};
  b.school("w1", all);
  b.school("w2", all);
  b.school("w3", {"u3"});
  return b.build();
}

Instance stable_eff() {
  Builder b;
  add_stable_eff(b, "", "u5", {});
  return b.build();
}

Instance minmaxse_gap() {
  // Base lists of the stable-eff instance.
  const std::vector<std::vector<int>> prefs{{1, 3, 4}, {1, 2}, {2, 1, 3}, {2, 3, 5}, {3, 2, 1}};
  const std::vector<std::vector<int>> prios{{5, 3, 2, 1}, {2, 5, 3, 4}, {3, 4, 1, 5}, {1}, {4}};
  auto w = [](int k) { return "w" + std::to_string(k); };
  auto wp = [](int k) { return "w" + std::to_string(k) + "'"; };
  auto v = [](int k) { return "v" + std::to_string(k); };
  auto u = [](int k) { return "u" + std::to_string(k); };
  Builder b;
  for (int i = 1; i <= 5; ++i) {
    Names list;
    for (int k : prefs[i - 1]) list.push_back(w(k));
    list.push_back(v(i));
    for (int k : prefs[i - 1]) list.push_back(wp(k));
    b.student(u(i), list);
  }
  for (int k = 1; k <= 5; ++k) b.student("d_" + w(k), {w(k)});
  for (int k = 1; k <= 5; ++k) b.student("d_" + v(k), {v(k)});
  for (int k = 1; k <= 5; ++k) {
    Names list{"d_" + w(k)};
    for (int i : prios[k - 1]) list.push_back(u(i));
    b.school(w(k), list);
  }
  for (int k = 1; k <= 5; ++k) {
    Names list;
    for (int i : prios[k - 1]) list.push_back(u(i));
    b.school(wp(k), list);
  }
  for (int k = 1; k <= 5; ++k) b.school(v(k), {"d_" + v(k), u(k)});
  return b.build();
}

Instance greedy_tight(int s_hat, int n) {
  if (s_hat < 1 || n < 1) throw InvalidInput("greedy-tight needs s_hat >= 1 and n >= 1");
  const std::string shared = "c" + idx(s_hat);
  Builder b;
  for (int i = 0; i < s_hat; ++i) b.student("e" + idx(i), {"c" + idx(i), shared});
  for (int j = 0; j <= s_hat; ++j) {
    b.student("d" + idx(j), {"c" + idx(j)});
    for (int l = 0; l < n; ++l)
      b.student("u" + idx(j) + "_" + idx(l), {"c" + idx(j), "w" + idx(j) + "_" + idx(l)});
  }
  for (int j = 0; j <= s_hat; ++j) {
    Names prios{"d" + idx(j)};
    for (int l = 0; l < n; ++l) prios.push_back("u" + idx(j) + "_" + idx(l));
    if (j < s_hat) {
      prios.push_back("e" + idx(j));
    } else {
      for (int i = 0; i < s_hat; ++i) prios.push_back("e" + idx(i));
    }
    b.school("c" + idx(j), prios);
  }
  for (int j = 0; j <= s_hat; ++j)
    for (int l = 0; l < n; ++l)
      b.school("w" + idx(j) + "_" + idx(l), {"u" + idx(j) + "_" + idx(l)});
  return b.build();
}

Instance example(std::string_view name) {
  if (name == "intro") return intro();
  if (name == "problems") return problems();
  if (name == "stable-eff") return stable_eff();
  if (name == "minmaxse-gap") return minmaxse_gap();
  throw InvalidInput("unknown example '" + std::string(name) + "'");
}

Generated vertex_cover(const Graph& g, int h) {
  check_graph(g);
  if (h < 0) throw InvalidInput("cover size must be non-negative");
  const int m = static_cast<int>(g.edges.size());
  auto vs = [](int i, int t) { return "v" + idx(i) + "_" + idx(t); };
  auto ds = [](int i, int t) { return "d" + idx(i) + "_" + idx(t); };
  Builder b;
  for (int t = 0; t < m; ++t) {
    auto [i, j] = std::minmax(g.edges[t].first, g.edges[t].second);
    b.student("e" + idx(t), {vs(i, t), vs(j, t)});
  }
  for (int i = 0; i < g.vertices; ++i) {
    Names prefs;
    for (int t = 0; t < m; ++t)
      if (g.edges[t].first == i || g.edges[t].second == i) prefs.push_back(vs(i, t));
    prefs.push_back("w" + idx(i));
    b.student("u" + idx(i), prefs);
  }
  for (int t = 0; t < m; ++t) {
    auto [i, j] = std::minmax(g.edges[t].first, g.edges[t].second);
    b.student(ds(i, t), {vs(i, t)});
    b.student(ds(j, t), {vs(j, t)});
  }
  for (int t = 0; t < m; ++t) {
    auto [i, j] = std::minmax(g.edges[t].first, g.edges[t].second);
    b.school(vs(i, t), {ds(i, t), "u" + idx(i), "e" + idx(t)});
    b.school(vs(j, t), {ds(j, t), "u" + idx(j), "e" + idx(t)});
  }
  for (int i = 0; i < g.vertices; ++i) b.school("w" + idx(i), {"u" + idx(i)});
  return {b.build(), static_cast<long long>(m) + h, std::nullopt};
}

Witness vertex_cover_witness(const Instance& inst, const Graph& g, std::span<const int> cover) {
  std::vector<char> in(static_cast<std::size_t>(g.vertices), 0);
  for (int v : cover) {
    if (v < 0 || v >= g.vertices) throw InvalidInput("cover vertex out of range");
    in[v] = 1;
  }
  WitnessBuilder wb(inst);
  const int m = static_cast<int>(g.edges.size());
  for (int t = 0; t < m; ++t) {
    auto [i, j] = std::minmax(g.edges[t].first, g.edges[t].second);
    wb.match("d" + idx(i) + "_" + idx(t), "v" + idx(i) + "_" + idx(t));
    wb.match("d" + idx(j) + "_" + idx(t), "v" + idx(j) + "_" + idx(t));
    if (!in[i] && !in[j]) throw InvalidInput("vertex set does not cover every edge");
    const int end = in[i] ? i : j;
    wb.match("e" + idx(t), "v" + idx(end) + "_" + idx(t));
  }
  for (int i = 0; i < g.vertices; ++i) {
    std::string target = "w" + idx(i);
    if (in[i]) {
      for (int t = 0; t < m; ++t) {
        if (g.edges[t].first == i || g.edges[t].second == i) {
          target = "v" + idx(i) + "_" + idx(t);
          break;
        }
      }
    }
    wb.match("u" + idx(i), target);
  }
  wb.raise_to_occupancy();
  return wb.done();
}

Generated set_cover(const SetSystem& sys, int k) {
  if (sys.universe < 1 || sys.sets.empty()) throw InvalidInput("set system needs elements and sets");
  if (k < 0) throw InvalidInput("cover size must be non-negative");
  const int n = sys.universe;
  const int m = static_cast<int>(sys.sets.size());
  std::vector<std::vector<int>> members(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> containing(static_cast<std::size_t>(n));
  for (int j = 0; j < m; ++j) {
    std::set<int> s(sys.sets[j].begin(), sys.sets[j].end());
    if (s.size() != sys.sets[j].size()) throw InvalidInput("a set repeats an element");
    for (int e : s) {
      if (e < 0 || e >= n) throw InvalidInput("set element out of range");
      members[j].push_back(e);
      containing[e].push_back(j);
    }
  }
  for (int e = 0; e < n; ++e)
    if (containing[e].empty())
      throw InvalidInput("element " + idx(e) + " lies in no set, so its student has an empty list");

  auto us = [](int j, int l) { return "u" + idx(j) + "_" + idx(l); };
  auto ws = [](int j, int l) { return "w" + idx(j) + "_" + idx(l); };
  Builder b;
  for (int e = 0; e < n; ++e) {
    Names prefs;
    for (int j : containing[e]) prefs.push_back("c" + idx(j));
    b.student("e" + idx(e), prefs);
  }
  for (int j = 0; j < m; ++j) b.student("d" + idx(j), {"c" + idx(j)});
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < n; ++l) b.student(us(j, l), {"c" + idx(j), ws(j, l)});
  for (int j = 0; j < m; ++j) {
    Names prios{"d" + idx(j)};
    for (int l = 0; l < n; ++l) prios.push_back(us(j, l));
    for (int e : members[j]) prios.push_back("e" + idx(e));
    b.school("c" + idx(j), prios);
  }
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < n; ++l) b.school(ws(j, l), {us(j, l)});
  return {b.build(), static_cast<long long>(k + 1) * n, std::nullopt};
}

Witness set_cover_witness(const Instance& inst, const SetSystem& sys, std::span<const int> cover) {
  const int n = sys.universe;
  const int m = static_cast<int>(sys.sets.size());
  std::vector<int> chosen(cover.begin(), cover.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  std::vector<char> in(static_cast<std::size_t>(m), 0);
  for (int j : chosen) {
    if (j < 0 || j >= m) throw InvalidInput("cover set out of range");
    in[j] = 1;
  }
  WitnessBuilder wb(inst);
  for (int j = 0; j < m; ++j) {
    wb.match("d" + idx(j), "c" + idx(j));
    for (int l = 0; l < n; ++l)
      wb.match("u" + idx(j) + "_" + idx(l), in[j] ? "c" + idx(j) : "w" + idx(j) + "_" + idx(l));
  }
  for (int e = 0; e < n; ++e) {
    const auto it = std::find_if(chosen.begin(), chosen.end(), [&](int j) {
      return std::find(sys.sets[j].begin(), sys.sets[j].end(), e) != sys.sets[j].end();
    });
    if (it == chosen.end()) throw InvalidInput("sets do not cover element " + idx(e));
    wb.match("e" + idx(e), "c" + idx(*it));
  }
  wb.raise_to_occupancy();
  return wb.done();
}

Generated mcc(const Graph& g, int h) {
  check_graph(g);
  check_coloring(g, h);
  check_pairs_covered(g, h);
  Builder b;
  for (auto p : color_pairs(h)) {
    Names prefs;
    for (int t : edges_of_pair(g, p)) prefs.push_back("e" + idx(t));
    b.student("s" + pair_tag(p), prefs);
  }
  add_clique_core(b, g, selectors_by_edge(g, h));
  return {b.build(), static_cast<long long>(h) * (h - 1) / 2 + h, std::nullopt};
}

Witness mcc_witness(const Instance& inst, const Graph& g, int h, std::span<const int> clique) {
  WitnessBuilder wb(inst);
  clique_witness_core(wb, g, h, clique);
  wb.raise_to_occupancy();
  return wb.done();
}

Generated se_mcc(const Graph& g, int h) {
  check_graph(g);
  check_coloring(g, h);
  check_pairs_covered(g, h);
  Builder b;
  for (auto p : color_pairs(h)) {
    Names extra;
    for (int t : edges_of_pair(g, p)) extra.push_back("e" + idx(t));
    add_stable_eff(b, "g" + pair_tag(p) + ".", "s" + pair_tag(p), extra);
  }
  add_clique_core(b, g, selectors_by_edge(g, h));
  return {b.build(), static_cast<long long>(h) * (h - 1) / 2 + h, std::nullopt};
}

Witness se_mcc_witness(const Instance& inst, const Graph& g, int h, std::span<const int> clique) {
  WitnessBuilder wb(inst);
  clique_witness_core(wb, g, h, clique);
  for (auto p : color_pairs(h)) {
    const std::string pre = "g" + pair_tag(p) + ".";
    wb.match(pre + "u2", pre + "w1");
    wb.match(pre + "u3", pre + "w2");
    wb.match(pre + "u4", pre + "w3");
    wb.match(pre + "u1", pre + "w4");
  }
  wb.raise_to_occupancy();
  return wb.done();
}

namespace {

std::string literal_school(int lit) {
  return (lit > 0 ? "x" : "nx") + std::to_string(lit > 0 ? lit : -lit);
}

void check_formula(const Formula& f) {
  if (f.variables < 1 || f.clauses.empty()) throw InvalidInput("formula needs variables and clauses");
  std::vector<int> pos(static_cast<std::size_t>(f.variables), 0), neg(pos);
  for (const auto& c : f.clauses) {
    for (int k = 0; k < 3; ++k) {
      const int lit = c[k];
      if (lit == 0 || std::abs(lit) > f.variables) throw InvalidInput("literal out of range");
      for (int l = 0; l < k; ++l)
        if (c[l] == lit) throw InvalidInput("clause repeats a literal");
      (lit > 0 ? pos : neg)[std::abs(lit) - 1]++;
    }
  }
  for (int i = 0; i < f.variables; ++i)
    if (pos[i] != 2 || neg[i] != 2)
      throw InvalidInput("variable " + idx(i) + " must occur exactly twice positively and twice negated");
}

}  // namespace

Generated sat22(const Formula& f, int eta) {
  check_formula(f);
  if (eta < 3) throw InvalidInput("eta must be at least 3");
  const int clauses = static_cast<int>(f.clauses.size());

  // Clause students ranked at each literal school, by occurrence.
  std::map<int, Names> occurrences;
  for (int j = 0; j < clauses; ++j)
    for (int lit : f.clauses[j]) occurrences[lit].push_back("C" + idx(j) + ".c");

  auto dummies = [&](const std::string& pre, const std::string& stem, int i) {
    Names out;
    for (int k = 0; k < eta; ++k) out.push_back(pre + stem + std::to_string(i) + "_" + idx(k));
    return out;
  };

  Builder b;
  // Type-1 gadget per clause.
  for (int j = 0; j < clauses; ++j) {
    const std::string pre = "C" + idx(j) + ".";
    b.student(pre + "u1", {pre + "w1", pre + "w2"});
    b.student(pre + "u2", {pre + "w1", pre + "w2", pre + "w3"});
    Names cprefs;
    for (int lit : f.clauses[j]) cprefs.push_back(literal_school(lit));
    cprefs.push_back(pre + "w2");
    cprefs.push_back(pre + "w1");
    b.student(pre + "c", cprefs);
    for (int i = 1; i <= 2; ++i) {
      const auto ds = dummies(pre, "d", i);
      const auto ss = dummies(pre, "s", i);
      for (int k = 0; k < eta; ++k) b.student(ds[k], {pre + "w" + std::to_string(i), ss[k]});
    }
  }
  // Type-2 gadget per variable, then the literal dummies.
  for (int i = 0; i < f.variables; ++i) {
    const std::string pre = "X" + idx(i) + ".";
    auto z = [&](int k) { return pre + "z" + std::to_string(k); };
    b.student(pre + "p1", {z(1), z(2)});
    b.student(pre + "p2", {z(1), z(2), z(3)});
    b.student(pre + "p3", {z(2), z(1), z(4)});
    b.student(pre + "T", {literal_school(i + 1), z(1)});
    b.student(pre + "F", {literal_school(-(i + 1)), z(1), z(5)});
    for (int g = 1; g <= 2; ++g) {
      const auto es = dummies(pre, "e", g);
      const auto ts = dummies(pre, "t", g);
      for (int k = 0; k < eta; ++k) b.student(es[k], {z(g), ts[k]});
    }
  }
  for (int i = 0; i < f.variables; ++i) {
    b.student("y" + idx(i), {literal_school(i + 1)});
    b.student("ny" + idx(i), {literal_school(-(i + 1))});
  }

  for (int j = 0; j < clauses; ++j) {
    const std::string pre = "C" + idx(j) + ".";
    Names w1{pre + "c", pre + "u1"};
    for (const auto& d : dummies(pre, "d", 1)) w1.push_back(d);
    w1.push_back(pre + "u2");
    Names w2{pre + "u1", pre + "u2"};
    for (const auto& d : dummies(pre, "d", 2)) w2.push_back(d);
    w2.push_back(pre + "c");
    b.school(pre + "w1", w1);
    b.school(pre + "w2", w2);
    b.school(pre + "w3", {pre + "u2"});
    for (int i = 1; i <= 2; ++i) {
      const auto ds = dummies(pre, "d", i);
      const auto ss = dummies(pre, "s", i);
      for (int k = 0; k < eta; ++k) b.school(ss[k], {ds[k]});
    }
  }
  for (int i = 0; i < f.variables; ++i) {
    const std::string pre = "X" + idx(i) + ".";
    Names z1{pre + "T", pre + "F", pre + "p3"};
    for (const auto& e : dummies(pre, "e", 1)) z1.push_back(e);
    z1.push_back(pre + "p1");
    z1.push_back(pre + "p2");
    Names z2{pre + "p1"};
    for (const auto& e : dummies(pre, "e", 2)) z2.push_back(e);
    z2.push_back(pre + "p2");
    z2.push_back(pre + "p3");
    b.school(pre + "z1", z1);
    b.school(pre + "z2", z2);
    b.school(pre + "z3", {pre + "p2"});
    b.school(pre + "z4", {pre + "p3"});
    b.school(pre + "z5", {pre + "F"});
    for (int g = 1; g <= 2; ++g) {
      const auto es = dummies(pre, "e", g);
      const auto ts = dummies(pre, "t", g);
      for (int k = 0; k < eta; ++k) b.school(ts[k], {es[k]});
    }
  }
  for (int i = 0; i < f.variables; ++i) {
    const std::string pre = "X" + idx(i) + ".";
    Names pos{"y" + idx(i), pre + "T"};
    for (const auto& c : occurrences[i + 1]) pos.push_back(c);
    Names neg{"ny" + idx(i), pre + "F"};
    for (const auto& c : occurrences[-(i + 1)]) neg.push_back(c);
    b.school(literal_school(i + 1), pos);
    b.school(literal_school(-(i + 1)), neg);
  }
  return {b.build(), 3LL * f.variables, 3};
}

Witness sat22_witness(const Instance& inst, const Formula& f, const std::vector<bool>& assignment) {
  check_formula(f);
  if (static_cast<int>(assignment.size()) != f.variables)
    throw InvalidInput("assignment must give one value per variable");
  auto truth = [&](int lit) { return assignment[std::abs(lit) - 1] == (lit > 0); };
  // eta is recovered from the instance: dummies C1.d1_1 .. C1.d1_eta.
  int eta = 0;
  while (inst.find_student("C1.d1_" + idx(eta))) ++eta;

  WitnessBuilder wb(inst);
  for (int i = 0; i < f.variables; ++i) {
    const std::string pre = "X" + idx(i) + ".";
    const int lit = assignment[i] ? i + 1 : -(i + 1);
    wb.match("y" + idx(i), literal_school(i + 1));
    wb.match("ny" + idx(i), literal_school(-(i + 1)));
    wb.raise(literal_school(lit), 3);
    wb.match(pre + (assignment[i] ? "T" : "F"), literal_school(lit));
    wb.match(pre + (assignment[i] ? "F" : "T"), pre + "z1");
    wb.match(pre + "p1", pre + "z2");
    wb.match(pre + "p2", pre + "z3");
    wb.match(pre + "p3", pre + "z4");
    for (int g = 1; g <= 2; ++g)
      for (int k = 0; k < eta; ++k)
        wb.match(pre + "e" + std::to_string(g) + "_" + idx(k), pre + "t" + std::to_string(g) + "_" + idx(k));
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const std::string pre = "C" + idx(static_cast<int>(j)) + ".";
    const auto& c = f.clauses[j];
    const auto it = std::find_if(c.begin(), c.end(), truth);
    if (it == c.end()) throw InvalidInput("assignment leaves clause " + idx(static_cast<int>(j)) + " false");
    wb.match(pre + "c", literal_school(*it));
    wb.match(pre + "u1", pre + "w1");
    wb.match(pre + "u2", pre + "w2");
    for (int g = 1; g <= 2; ++g)
      for (int k = 0; k < eta; ++k)
        wb.match(pre + "d" + std::to_string(g) + "_" + idx(k), pre + "s" + std::to_string(g) + "_" + idx(k));
  }
  return wb.done();
}

namespace {

// Uniform integer in [lo, hi] by rejection, identical on every platform.
int uniform(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

template <class T>
void shuffle(std::mt19937_64& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[uniform(rng, 0, static_cast<int>(i - 1))]);
}

}  // namespace

Instance random_instance(const RandomParams& p) {
  if (p.students < 1 || p.schools < 1) throw InvalidInput("random instance needs students and schools");
  if (p.capacity.first < 1 || p.capacity.first > p.capacity.second)
    throw InvalidInput("capacity range must satisfy 1 <= lo <= hi");
  if (p.preference_length.first < 1 || p.preference_length.first > p.preference_length.second)
    throw InvalidInput("preference length range must satisfy 1 <= lo <= hi");
  std::mt19937_64 rng(p.seed);
  const int len_lo = std::min(p.preference_length.first, p.schools);
  const int len_hi = std::min(p.preference_length.second, p.schools);

  std::vector<std::vector<int>> prefs(static_cast<std::size_t>(p.students));
  for (auto& list : prefs) {
    std::vector<int> all(static_cast<std::size_t>(p.schools));
    for (int w = 0; w < p.schools; ++w) all[w] = w;
    shuffle(rng, all);
    all.resize(static_cast<std::size_t>(uniform(rng, len_lo, len_hi)));
    list = std::move(all);
  }
  std::vector<int> caps(static_cast<std::size_t>(p.schools));
  for (int& c : caps) c = uniform(rng, p.capacity.first, p.capacity.second);
  std::vector<std::vector<int>> prios(static_cast<std::size_t>(p.schools));
  for (int u = 0; u < p.students; ++u)
    for (int w : prefs[u]) prios[w].push_back(u);
  for (auto& list : prios) shuffle(rng, list);

  std::vector<int> renumber(static_cast<std::size_t>(p.schools), -1);
  InstanceSpec spec;
  for (int w = 0; w < p.schools; ++w) {
    if (prios[w].empty()) continue;
    renumber[w] = static_cast<int>(spec.schools.size());
    spec.schools.push_back("w" + idx(renumber[w]));
    spec.capacities.push_back(caps[w]);
    spec.priorities.push_back(prios[w]);
  }
  for (int u = 0; u < p.students; ++u) {
    spec.students.push_back("u" + idx(u));
    std::vector<int> list;
    for (int w : prefs[u]) list.push_back(renumber[w]);
    spec.preferences.push_back(std::move(list));
  }
  return Instance(std::move(spec));
}

}  // namespace capmatch::gen
