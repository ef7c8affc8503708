#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace eepc {

// Normal-form game with per-player finite action sets. Payoffs are stored
// flat: index = sum_i digit_i * stride_i with player 0 the fastest axis.
class FiniteGame {
 public:
  FiniteGame(std::vector<std::vector<std::string>> action_labels,
             std::string name = {});

  int players() const { return static_cast<int>(labels_.size()); }
  int num_actions(int player) const;
  const std::string& action_label(int player, int action) const;
  const std::string& name() const { return name_; }

  std::size_t num_joint_actions() const { return payoff_stride_; }

  std::size_t joint_index(const std::vector<int>& actions) const;
  std::vector<int> decode(std::size_t joint) const;
  // Joint index with `player`'s digit replaced by `action`.
  std::size_t replace(std::size_t joint, int player, int action) const;

  double payoff(std::size_t joint, int player) const;
  double payoff(const std::vector<int>& actions, int player) const;
  void set_payoff(std::size_t joint, int player, double value);

  nlohmann::json to_json() const;

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::size_t> strides_;
  std::size_t payoff_stride_;            // product of action counts
  std::vector<double> payoffs_;          // [joint * players + player]
  std::string name_;
};

// All pure equilibria (no unilateral deviation improves by more than tol).
// Throws std::invalid_argument when the joint-action space exceeds 2^20.
std::vector<std::vector<int>> enumerate_pure_equilibria(const FiniteGame& game,
                                                        double tol = 1e-12);

struct CycleWitness {
  int player_a = 0, player_b = 0;
  int from_a = 0, to_a = 0, from_b = 0, to_b = 0;
  std::vector<int> context;  // full joint action the cycle starts from
  double value = 0.0;        // signed cycle sum
};

struct PotentialCheck {
  bool is_potential = false;
  double max_cycle = 0.0;          // largest |cycle sum| seen
  CycleWitness worst;              // attained at max_cycle
  std::vector<double> potential;   // filled only when is_potential
};

// Exact-potential test via four-cycle sums over every pair of players and
// pair of unilateral deviations. When all cycles vanish (<= tol), also
// path-integrates a potential from joint action 0 and re-verifies every
// unilateral deviation against it.
PotentialCheck check_exact_potential(const FiniteGame& game,
                                     double tol = 1e-9);

// Weighted variant: divides player i's payoffs by weights[i] and runs the
// exact test; the returned potential V then satisfies
//   u_i(s) - u_i(t) = weights[i] * (V(s) - V(t))
// for every unilateral deviation, which is re-verified before returning.
PotentialCheck check_weighted_potential(const FiniteGame& game,
                                        const std::vector<double>& weights,
                                        double tol = 1e-9);

}  // namespace eepc
