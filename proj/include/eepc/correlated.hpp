#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eepc/finite_game.hpp"
#include "eepc/two_player.hpp"

namespace eepc {

struct CeResidual {
  int player = 0;
  int recommended = 0;
  int deviation = 0;
  double slack = 0.0;  // conditional gain from obeying; negative = violated
};

struct CeCheck {
  bool ok = false;
  double worst_slack = 0.0;
  std::vector<CeResidual> residuals;
};

// Tests the conditional obedience inequalities of a joint distribution `q`
// over joint actions (indexed like FiniteGame joints). Recommendations with
// zero marginal probability are skipped. `q` must be a distribution within
// 1e-9 (nonnegative, sums to 1).
CeCheck is_correlated_equilibrium(const FiniteGame& game,
                                  const std::vector<double>& q,
                                  double tol = 1e-9);

// Expected utility of every player under joint distribution q.
std::vector<double> expected_utilities(const FiniteGame& game,
                                       const std::vector<double>& q);

// For the 2x2 sensing matrix: the convex combination putting mass `lambda`
// on (S, NS) and 1-lambda on (NS, S), returned as a joint distribution over
// the 4 cells of to_finite_game(m).
std::vector<double> lambda_mixture(const SensingMatrix2x2& m, double lambda);

struct CeOptimum {
  std::vector<double> q;
  double value = 0.0;
};

// Maximizes sum_s objective[s] * q[s] over the correlated-equilibrium
// polytope (obedience inequalities in unconditional form + simplex
// constraints) via the in-house simplex.
CeOptimum optimize_over_ce(const FiniteGame& game,
                           const std::vector<double>& objective);

// Vertices of the correlated-equilibrium polytope (basis enumeration;
// intended for small games).
std::vector<std::vector<double>> ce_polytope_vertices(const FiniteGame& game);

struct RegionPoint {
  double theta = 0.0;  // objective angle, radians
  double u0 = 0.0;     // expected utilities at the optimizer, bit/J
  double u1 = 0.0;
  std::vector<double> q;
};

// Traces the utility region of the CE polytope: for `num_angles` directions
// theta in [0, 2*pi), maximizes cos(theta)*U0 + sin(theta)*U1 and reports
// the barycenter of the optimal vertices (so edges supported by a tie are
// represented by their midpoints).
std::vector<RegionPoint> ce_utility_region(const SensingMatrix2x2& m,
                                           int num_angles = 360);

}  // namespace eepc
