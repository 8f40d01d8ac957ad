#include <doctest.h>

#include <cmath>
#include <functional>
#include <optional>
#include <random>

#include "capmatch/lp.hpp"

using namespace capmatch::lp;

namespace {

// Minimum over all basic feasible points: every choice of num_vars tight
// rows among the constraints and sign bounds, solved by elimination.
std::optional<double> vertex_minimum(const Program& p) {
  const int n = p.num_vars;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (const auto& c : p.constraints) {
    std::vector<double> row(static_cast<std::size_t>(n), 0.0);
    for (auto [j, a] : c.terms) row[j] += a;
    rows.push_back(row);
    rhs.push_back(c.rhs);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> row(static_cast<std::size_t>(n), 0.0);
    row[j] = 1.0;
    rows.push_back(row);
    rhs.push_back(0.0);
  }
  const int total = static_cast<int>(rows.size());
  std::optional<double> best;
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      std::vector<std::vector<double>> a;
      for (int k = 0; k < n; ++k) {
        auto row = rows[pick[k]];
        row.push_back(rhs[pick[k]]);
        a.push_back(row);
      }
      for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
          if (std::abs(a[r][col]) > 1e-12 && (piv < 0 || std::abs(a[r][col]) > std::abs(a[piv][col]))) piv = r;
        if (piv < 0) return;
        std::swap(a[col], a[piv]);
        for (int r = 0; r < n; ++r) {
          if (r == col) continue;
          const double f = a[r][col] / a[col][col];
          for (int k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
        }
      }
      std::vector<double> x(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) x[j] = a[j][n] / a[j][j];
      if (max_violation(p, x) > 1e-7) return;
      double v = 0;
      for (int j = 0; j < n; ++j) v += p.cost[j] * x[j];
      if (!best || v < *best) best = v;
      return;
    }
    for (int i = start; i < total; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_CASE("small covering program") {
  // min x + y  s.t.  x + 2y >= 2, 3x + y >= 3
  Program p{2, {1, 1}, {{{{0, 1}, {1, 2}}, Sense::kGreaterEqual, 2}, {{{0, 3}, {1, 1}}, Sense::kGreaterEqual, 3}}};
  const auto s = solve(p);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.value == doctest::Approx(1.4));
  CHECK(max_violation(p, s.x) <= kTolerance);
}

TEST_CASE("equalities, infeasibility and unboundedness") {
  Program eq{2, {1, 2}, {{{{0, 1}, {1, 1}}, Sense::kEqual, 1}}};
  auto s = solve(eq);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.value == doctest::Approx(1.0));

  Program bad{1, {1}, {{{{0, 1}}, Sense::kLessEqual, -1}}};
  CHECK(solve(bad).status == Status::kInfeasible);

  Program open{1, {-1}, {{{{0, 1}}, Sense::kGreaterEqual, 1}}};
  CHECK(solve(open).status == Status::kUnbounded);
}

TEST_CASE("degenerate program terminates") {
  // Several constraints tight at the origin.
  Program p{3, {-1, -1, -1},
            {{{{0, 1}, {1, -1}}, Sense::kLessEqual, 0},
             {{{1, 1}, {2, -1}}, Sense::kLessEqual, 0},
             {{{2, 1}, {0, -1}}, Sense::kLessEqual, 0},
             {{{0, 1}, {1, 1}, {2, 1}}, Sense::kLessEqual, 3}}};
  const auto s = solve(p);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.value == doctest::Approx(-3.0));
}

TEST_CASE("random bounded programs agree with vertex enumeration") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-3, 4), small(0, 3);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 2;
    Program p;
    p.num_vars = n;
    for (int j = 0; j < n; ++j) p.cost.push_back(coef(rng));
    // A box keeps every instance bounded.
    Constraint box{{}, Sense::kLessEqual, 5.0 + small(rng)};
    for (int j = 0; j < n; ++j) box.terms.push_back({j, 1.0});
    p.constraints.push_back(box);
    const int rows = 1 + trial % 3;
    for (int r = 0; r < rows; ++r) {
      Constraint c;
      for (int j = 0; j < n; ++j) c.terms.push_back({j, static_cast<double>(coef(rng))});
      c.sense = static_cast<Sense>(small(rng) % 3);
      c.rhs = coef(rng);
      p.constraints.push_back(c);
    }
    const auto expected = vertex_minimum(p);
    const auto s = solve(p);
    if (!expected) {
      CHECK(s.status == Status::kInfeasible);
      continue;
    }
    REQUIRE(s.status == Status::kOptimal);
    CHECK(s.value == doctest::Approx(*expected).epsilon(1e-7));
    CHECK(max_violation(p, s.x) <= kTolerance);
    ++solved;
  }
  CHECK(solved > 100);
}
