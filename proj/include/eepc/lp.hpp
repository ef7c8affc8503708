#pragma once

#include <cstddef>
#include <vector>

namespace eepc {

// Dense linear program
//   maximize c.x  subject to  A_ub x <= b_ub,  A_eq x == b_eq,  x >= 0.
// Matrices are row-major lists of rows; every row must have c.size()
// entries.
struct LpProblem {
  std::vector<double> c;
  std::vector<std::vector<double>> a_ub;
  std::vector<double> b_ub;
  std::vector<std::vector<double>> a_eq;
  std::vector<double> b_eq;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective = 0.0;
};

// Two-phase primal simplex with Bland's rule (deterministic, cycle-free).
// Sized for the small dense programs in this project.
LpSolution solve_lp(const LpProblem& problem, double tol = 1e-9);

// All vertices of { x : A x >= b, C x == d, x >= 0 } by basis enumeration:
// every choice of n - rank(eq) active inequalities (including the x_i >= 0
// bounds) is solved and kept when it satisfies the remaining constraints.
// Intended for low dimension; throws std::invalid_argument when the number
// of basis candidates exceeds ~1e6.
std::vector<std::vector<double>> enumerate_vertices(
    const std::vector<std::vector<double>>& a_ge,
    const std::vector<double>& b_ge,
    const std::vector<std::vector<double>>& a_eq,
    const std::vector<double>& b_eq, std::size_t dim, double tol = 1e-9);

}  // namespace eepc
