#pragma once

// Dense two-phase simplex for small linear programs.

#include <utility>
#include <vector>

namespace capmatch::lp {

inline constexpr double kTolerance = 1e-9;

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Constraint {
  std::vector<std::pair<int, double>> terms;  // (variable, coefficient)
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

/// minimize c.x subject to the constraints and x >= 0.
struct Program {
  int num_vars = 0;
  std::vector<double> cost;
  std::vector<Constraint> constraints;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  double value = 0.0;
  std::vector<double> x;
};

/// Bland's rule throughout, so degenerate pivots cannot cycle.
Solution solve(const Program& program);

/// Largest violation of any constraint or sign bound at x.
double max_violation(const Program& program, const std::vector<double>& x);

}  // namespace capmatch::lp
