#include "eepc/correlated.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "eepc/lp.hpp"

namespace eepc {

namespace {

void check_distribution(const FiniteGame& game, const std::vector<double>& q) {
  if (q.size() != game.num_joint_actions())
    throw std::invalid_argument(
        "q: one probability per joint action required");
  double sum = 0.0;
  for (std::size_t s = 0; s < q.size(); ++s) {
    if (!(q[s] >= -1e-9)) {
      std::ostringstream os;
      os << "q[" << s << "]: negative probability";
      throw std::invalid_argument(os.str());
    }
    sum += q[s];
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("q: probabilities must sum to 1");
}

// Rows of the unconditional obedience system: for every player, recommended
// action a, and deviation b != a,
//   sum_{s : s_i = a} q[s] * (u_i(s) - u_i(s with i -> b)) >= 0.
std::vector<std::vector<double>> obedience_rows(const FiniteGame& game) {
  std::vector<std::vector<double>> rows;
  const std::size_t joints = game.num_joint_actions();
  for (int i = 0; i < game.players(); ++i)
    for (int a = 0; a < game.num_actions(i); ++a)
      for (int b = 0; b < game.num_actions(i); ++b) {
        if (b == a) continue;
        std::vector<double> row(joints, 0.0);
        for (std::size_t s = 0; s < joints; ++s) {
          if (game.decode(s)[i] != a) continue;
          row[s] = game.payoff(s, i) - game.payoff(game.replace(s, i, b), i);
        }
        rows.push_back(std::move(row));
      }
  return rows;
}

}  // namespace

CeCheck is_correlated_equilibrium(const FiniteGame& game,
                                  const std::vector<double>& q, double tol) {
  check_distribution(game, q);
  CeCheck out;
  out.ok = true;
  const std::size_t joints = game.num_joint_actions();
  for (int i = 0; i < game.players(); ++i)
    for (int a = 0; a < game.num_actions(i); ++a) {
      double marginal = 0.0;
      for (std::size_t s = 0; s < joints; ++s)
        if (game.decode(s)[i] == a) marginal += q[s];
      if (marginal <= 0.0) continue;  // recommendation never issued
      for (int b = 0; b < game.num_actions(i); ++b) {
        if (b == a) continue;
        double gain = 0.0;
        for (std::size_t s = 0; s < joints; ++s) {
          if (game.decode(s)[i] != a) continue;
          gain += q[s] / marginal *
                  (game.payoff(s, i) -
                   game.payoff(game.replace(s, i, b), i));
        }
        out.residuals.push_back({i, a, b, gain});
        if (gain < out.worst_slack) out.worst_slack = gain;
        if (gain < -tol) out.ok = false;
      }
    }
  return out;
}

std::vector<double> expected_utilities(const FiniteGame& game,
                                       const std::vector<double>& q) {
  check_distribution(game, q);
  std::vector<double> u(game.players(), 0.0);
  for (std::size_t s = 0; s < q.size(); ++s)
    for (int i = 0; i < game.players(); ++i)
      u[i] += q[s] * game.payoff(s, i);
  return u;
}

std::vector<double> lambda_mixture(const SensingMatrix2x2& m, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("lambda: must lie in [0, 1]");
  FiniteGame game = to_finite_game(m);
  std::vector<double> q(game.num_joint_actions(), 0.0);
  q[game.joint_index({1, 0})] = lambda;        // (S, NS)
  q[game.joint_index({0, 1})] = 1.0 - lambda;  // (NS, S)
  return q;
}

CeOptimum optimize_over_ce(const FiniteGame& game,
                           const std::vector<double>& objective) {
  const std::size_t joints = game.num_joint_actions();
  if (objective.size() != joints)
    throw std::invalid_argument(
        "objective: one weight per joint action required");

  LpProblem lp;
  lp.c = objective;
  for (auto& row : obedience_rows(game)) {
    // row . q >= 0  ->  (-row) . q <= 0.
    for (auto& v : row) v = -v;
    lp.a_ub.push_back(std::move(row));
    lp.b_ub.push_back(0.0);
  }
  lp.a_eq.push_back(std::vector<double>(joints, 1.0));
  lp.b_eq.push_back(1.0);

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw std::runtime_error(
        "ce: obedience polytope unexpectedly empty or unbounded");
  return {sol.x, sol.objective};
}

std::vector<std::vector<double>> ce_polytope_vertices(const FiniteGame& game) {
  const std::size_t joints = game.num_joint_actions();
  if (joints > 16)
    throw std::invalid_argument(
        "game: vertex enumeration capped at 16 joint actions");
  const auto rows = obedience_rows(game);
  const std::vector<double> zeros(rows.size(), 0.0);
  const std::vector<std::vector<double>> eq{
      std::vector<double>(joints, 1.0)};
  const std::vector<double> one{1.0};
  return enumerate_vertices(rows, zeros, eq, one, joints);
}

std::vector<RegionPoint> ce_utility_region(const SensingMatrix2x2& m,
                                           int num_angles) {
  if (num_angles < 1)
    throw std::invalid_argument("num_angles: must be >= 1");
  const FiniteGame game = to_finite_game(m);
  const auto vertices = ce_polytope_vertices(game);
  if (vertices.empty())
    throw std::runtime_error("ce: polytope has no vertices");

  // Expected utilities per vertex, computed once.
  std::vector<std::array<double, 2>> payoff(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto u = expected_utilities(game, vertices[v]);
    payoff[v] = {u[0], u[1]};
  }

  std::vector<RegionPoint> region;
  region.reserve(static_cast<std::size_t>(num_angles));
  for (int k = 0; k < num_angles; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / num_angles;
    const double cx = std::cos(theta), cy = std::sin(theta);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& p : payoff)
      best = std::max(best, cx * p[0] + cy * p[1]);
    RegionPoint pt;
    pt.theta = theta;
    pt.q.assign(game.num_joint_actions(), 0.0);
    int hits = 0;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (cx * payoff[v][0] + cy * payoff[v][1] < best - 1e-9) continue;
      ++hits;
      pt.u0 += payoff[v][0];
      pt.u1 += payoff[v][1];
      for (std::size_t s = 0; s < pt.q.size(); ++s) pt.q[s] += vertices[v][s];
    }
    pt.u0 /= hits;
    pt.u1 /= hits;
    for (auto& v : pt.q) v /= hits;
    region.push_back(std::move(pt));
  }
  return region;
}

}  // namespace eepc
