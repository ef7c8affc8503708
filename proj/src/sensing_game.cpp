#include "eepc/sensing_game.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eepc {

FiniteGame build_sensing_game(const NetworkConfig& cfg,
                              const EfficiencyModel& model,
                              GammaIndexing indexing, double tol) {
  cfg.validate();
  if (cfg.players > 16)
    throw std::invalid_argument("players: sensing game capped at 16 players");
  SensingUtilityEvaluator eval(cfg, model, indexing, tol);

  std::vector<std::vector<std::string>> labels(
      cfg.players, std::vector<std::string>{"NS", "S"});
  FiniteGame game(std::move(labels), "sensing");

  // Payoffs depend on opponents only through the sensing count, so the two
  // per-count shapes are precomputed once.
  std::vector<double> shape_s(cfg.players + 1, 0.0);
  std::vector<double> shape_ns(cfg.players + 1, 0.0);
  for (int f = 1; f <= cfg.players; ++f)
    shape_s[f] = eval.shape(SenseAction::Sensing, f, cfg.players - f);
  for (int f = 0; f < cfg.players; ++f)
    shape_ns[f] = eval.shape(SenseAction::NonSensing, f, cfg.players - f);

  for (std::size_t joint = 0; joint < game.num_joint_actions(); ++joint) {
    const int sensing = std::popcount(joint);
    for (int i = 0; i < cfg.players; ++i) {
      const bool senses = (joint >> i) & 1u;
      const double shape = senses ? shape_s[sensing] : shape_ns[sensing];
      game.set_payoff(joint, i, cfg.weight(i) * shape);
    }
  }
  return game;
}

PotentialTable rosenthal_potential(const NetworkConfig& cfg,
                                   const EfficiencyModel& model,
                                   GammaIndexing indexing, double tol) {
  cfg.validate();
  SensingUtilityEvaluator eval(cfg, model, indexing, tol);
  const int k = cfg.players;

  PotentialTable table;
  table.weights.resize(k);
  for (int i = 0; i < k; ++i) table.weights[i] = cfg.weight(i);
  table.equal_weights = true;
  for (int i = 1; i < k; ++i) {
    if (std::fabs(table.weights[i] - table.weights[0]) >
        1e-12 * std::fabs(table.weights[0]))
      table.equal_weights = false;
  }

  // phi(F) = sum_{i=1..F} shape_S(i, K-i) + sum_{j=1..K-F} shape_NS(K-j, j):
  // flipping one player from NS to S moves F to F+1 and changes phi by
  // exactly shape_S(F+1, K-F-1) - shape_NS(F, K-F), the deviator's change.
  table.phi.assign(k + 1, 0.0);
  for (int f = 0; f <= k; ++f) {
    double acc = 0.0;
    for (int i = 1; i <= f; ++i)
      acc += eval.shape(SenseAction::Sensing, i, k - i);
    for (int j = 1; j <= k - f; ++j)
      acc += eval.shape(SenseAction::NonSensing, k - j, j);
    table.phi[f] = acc;
  }
  if (table.equal_weights)
    for (auto& v : table.phi) v *= table.weights[0];
  return table;
}

std::vector<int> pure_equilibria_by_potential(const PotentialTable& table) {
  if (table.phi.empty())
    throw std::invalid_argument("table: empty potential");
  double best = table.phi[0];
  for (double v : table.phi) best = std::max(best, v);
  const double tol = 1e-12 * std::max(1.0, std::fabs(best));
  std::vector<int> argmax;
  for (std::size_t f = 0; f < table.phi.size(); ++f)
    if (best - table.phi[f] <= tol) argmax.push_back(static_cast<int>(f));
  return argmax;
}

}  // namespace eepc
