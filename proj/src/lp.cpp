#include "capmatch/lp.hpp"

#include <algorithm>
#include <cmath>

#include "capmatch/core.hpp"

namespace capmatch::lp {

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0.0),
        basis_(static_cast<std::size_t>(rows), -1) {}

  double& at(int r, int c) { return a_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double& cost(int c) { return at(rows_, c); }  // reduced costs; rhs slot holds -value
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }

  void pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  /// Minimizes the objective row over columns with allowed[c]. Returns false
  /// if unbounded.
  bool optimize(const std::vector<char>& allowed) {
    while (true) {
      int enter = -1;
      for (int c = 0; c < cols_; ++c) {
        if (allowed[c] && cost(c) < -kTolerance) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int r = 0; r < rows_; ++r) {
        const double coef = at(r, enter);
        if (coef <= kTolerance) continue;
        const double ratio = rhs(r) / coef;
        if (leave < 0 || ratio < best - kTolerance ||
            (ratio <= best + kTolerance && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

 private:
  int rows_, cols_;
  std::vector<double> a_;
  std::vector<int> basis_;
};

}  // namespace

Solution solve(const Program& program) {
  const int n = program.num_vars;
  const int m = static_cast<int>(program.constraints.size());
  if (static_cast<int>(program.cost.size()) != n)
    throw InvalidInput("LP cost vector does not match the variable count");

  // Columns: originals, one slack/surplus per inequality, one artificial per row.
  int slack_count = 0;
  for (const auto& con : program.constraints)
    if (con.sense != Sense::kEqual) ++slack_count;
  const int first_slack = n;
  const int first_art = n + slack_count;
  const int cols = first_art + m;
  Tableau t(m, cols);

  int slack = first_slack;
  for (int r = 0; r < m; ++r) {
    const auto& con = program.constraints[r];
    const double sign = con.rhs < 0 ? -1.0 : 1.0;
    for (const auto& [var, coef] : con.terms) {
      if (var < 0 || var >= n) throw InvalidInput("LP constraint references an unknown variable");
      t.at(r, var) += sign * coef;
    }
    if (con.sense == Sense::kLessEqual) t.at(r, slack++) = sign;
    if (con.sense == Sense::kGreaterEqual) t.at(r, slack++) = -sign;
    t.rhs(r) = sign * con.rhs;
    t.at(r, first_art + r) = 1.0;
    t.basis()[r] = first_art + r;
  }

  // Phase 1: minimize the sum of artificials.
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= cols; ++c)
      if (c < first_art || c == cols) t.at(m, c) -= t.at(r, c);
  std::vector<char> allowed(static_cast<std::size_t>(cols), 1);
  t.optimize(allowed);
  Solution out;
  if (-t.rhs(m) > 1e-7) {
    out.status = Status::kInfeasible;
    return out;
  }

  // Drive artificials out of the basis; rows where that fails are redundant.
  for (int r = 0; r < m; ++r) {
    if (t.basis()[r] < first_art) continue;
    for (int c = 0; c < first_art; ++c) {
      if (std::abs(t.at(r, c)) > kTolerance) {
        t.pivot(r, c);
        break;
      }
    }
  }
  for (int c = first_art; c < cols; ++c) allowed[c] = 0;

  // Phase 2.
  for (int c = 0; c <= cols; ++c) t.cost(c) = c < n ? program.cost[c] : 0.0;
  for (int r = 0; r < m; ++r) {
    const int b = t.basis()[r];
    const double cb = t.cost(b);
    if (cb == 0.0) continue;
    for (int c = 0; c <= cols; ++c) t.cost(c) -= cb * t.at(r, c);
  }
  if (!t.optimize(allowed)) {
    out.status = Status::kUnbounded;
    return out;
  }

  out.status = Status::kOptimal;
  out.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < m; ++r)
    if (t.basis()[r] < n) out.x[t.basis()[r]] = std::max(0.0, t.rhs(r));
  out.value = 0.0;
  for (int j = 0; j < n; ++j) out.value += program.cost[j] * out.x[j];
  return out;
}

double max_violation(const Program& program, const std::vector<double>& x) {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (const auto& con : program.constraints) {
    double lhs = 0.0;
    for (const auto& [var, coef] : con.terms) lhs += coef * x[var];
    switch (con.sense) {
      case Sense::kLessEqual: worst = std::max(worst, lhs - con.rhs); break;
      case Sense::kGreaterEqual: worst = std::max(worst, con.rhs - lhs); break;
      case Sense::kEqual: worst = std::max(worst, std::abs(lhs - con.rhs)); break;
    }
  }
  return worst;
}

}  // namespace capmatch::lp
