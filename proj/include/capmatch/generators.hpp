#pragma once

// Worked examples, reduction gadgets and seeded random instances.
// Names follow the constructions: 1-based indices, ordered sets realized in
// increasing index order.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "capmatch/core.hpp"

namespace capmatch::gen {

Instance intro();
Instance problems();
Instance stable_eff();
/// The stable-eff gadget padded with primed copies, v schools and dummies.
Instance minmaxse_gap();
/// s_hat initially unassigned students, s_hat + 1 contested schools, each
/// guarded by n students that greedy placement makes envious.
Instance greedy_tight(int s_hat, int n);

/// intro, problems, stable-eff, minmaxse-gap.
Instance example(std::string_view name);

/// Vertices are 0-based; colors (used by the clique encodings) lie in [0, h).
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors;
};

/// Elements and sets 0-based.
struct SetSystem {
  int universe = 0;
  std::vector<std::vector<int>> sets;
};

/// Clauses of signed 1-based variable indices.
struct Formula {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

struct Generated {
  Instance instance;
  long long budget = 0;                   // bound on |r|_1 from the construction
  std::optional<long long> max_budget;    // bound on |r|_inf, where the construction sets one
};

struct Witness {
  CapacityVector increase;
  Matching matching;
};

/// Budget m + h for m edges.
Generated vertex_cover(const Graph& graph, int h);
Witness vertex_cover_witness(const Instance& inst, const Graph& graph, std::span<const int> cover);

/// Budget (k + 1) * universe. Every element must lie in some set.
Generated set_cover(const SetSystem& system, int k);
Witness set_cover_witness(const Instance& inst, const SetSystem& system, std::span<const int> cover);

/// Budget C(h, 2) + h. Every color pair must be joined by some edge.
Generated mcc(const Graph& graph, int h);
/// clique[c] is the chosen vertex of color c.
Witness mcc_witness(const Instance& inst, const Graph& graph, int h, std::span<const int> clique);

/// As mcc, with each edge selector embedded in a stable-eff gadget.
Generated se_mcc(const Graph& graph, int h);
Witness se_mcc_witness(const Instance& inst, const Graph& graph, int h,
                       std::span<const int> clique);

/// Each variable must occur exactly twice positively and twice negated, and
/// eta >= 3. Budgets: |r|_1 <= 3 * variables, |r|_inf <= 3.
Generated sat22(const Formula& formula, int eta);
/// assignment[i] is the value of variable i + 1; must satisfy the formula.
Witness sat22_witness(const Instance& inst, const Formula& formula,
                      const std::vector<bool>& assignment);

struct RandomParams {
  int students = 5;
  int schools = 4;
  std::pair<int, int> capacity{1, 2};
  std::pair<int, int> preference_length{1, 4};
  std::uint64_t seed = 0;
};

/// Each student lists a uniformly sampled set of schools in random order;
/// each school ranks the students listing it in random order. Schools nobody
/// lists are dropped and the rest renumbered.
Instance random_instance(const RandomParams& params);

}  // namespace capmatch::gen
