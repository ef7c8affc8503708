#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eepc/efficiency.hpp"
#include "eepc/finite_game.hpp"
#include "eepc/network.hpp"
#include "eepc/two_player.hpp"

namespace eepc {

struct GridSpec {
  double min_power = 0.0;   // W; 0 = derive from the one-shot equilibrium
  double max_power = 0.0;   // W; 0 = derive
  int points = 64;          // power levels per player
  bool include_nash = true; // snap the nearest level onto each p_i*
};

// Geometric power grid on [lo, hi] with n points.
std::vector<double> geometric_grid(double lo, double hi, int n);

// One-shot game in which each of the two players picks a sensing bit and a
// transmit power simultaneously. Action index = sense * points + power_k.
// Payoff: (1 - alpha * sense_i) * rate_i * f(sinr_i) / p_i; the sensing bit
// of the opponent never enters.
struct HybridGame {
  FiniteGame game;
  std::array<std::vector<double>, 2> grid;  // power levels per player, W
  double alpha = 0.0;

  int grid_points(int player) const {
    return static_cast<int>(grid[player].size());
  }
  // Decompose an action index.
  bool senses(int player, int action) const {
    return action >= grid_points(player);
  }
  double power_of(int player, int action) const {
    return grid[player][action % grid_points(player)];
  }
};

HybridGame build_hybrid_game(const NetworkConfig& cfg,
                             const EfficiencyModel& model,
                             const GridSpec& spec = {});

struct DominanceReport {
  double min_margin = 0.0;  // worst-case payoff loss from flipping NS -> S
  bool strict = false;      // every sensing action strictly dominated
  nlohmann::json to_json() const;
};

// For every player, power level, and opponent action, the margin by which
// the matching non-sensing action beats the sensing one (= alpha times the
// non-sensing payoff).
DominanceReport dominance_check(const HybridGame& hybrid);

// Pure equilibria of the full hybrid game.
std::vector<std::vector<int>> hybrid_equilibria(const HybridGame& hybrid,
                                                double tol = 1e-12);

// The power-only subgame left after deleting all sensing actions.
FiniteGame drop_sensing_actions(const HybridGame& hybrid);

struct OutcomeComparison {
  std::string label;
  std::array<double, 2> utility{};
  std::string verdict;  // vs the hybrid equilibrium outcome
};

struct ParadoxReport {
  std::array<int, 2> ne_sense{};
  std::array<double, 2> ne_power{};
  std::array<double, 2> ne_utility{};
  std::size_t num_hybrid_equilibria = 0;
  double min_dominance_margin = 0.0;
  EquilibriumClass sensing_regime;
  std::vector<OutcomeComparison> two_stage;
  std::string verdict;       // "paradox" | "coincide" | "mixed"
  double grid_step = 0.0;    // max relative gap between adjacent levels
  nlohmann::json to_json() const;
};

// Contrasts the hybrid-game equilibrium with the two-stage (sense first,
// then transmit) outcomes at sensing cost `alpha`: in the three-equilibria
// regime the hierarchical outcomes Pareto-dominate the always-transmit
// equilibrium the hybrid game collapses to; in the unique regime the two
// coincide.
ParadoxReport paradox_report(const NetworkConfig& cfg,
                             const EfficiencyModel& model, double alpha,
                             const GridSpec& spec = {});

}  // namespace eepc
