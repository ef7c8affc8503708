#include "eepc/finite_game.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eepc {

FiniteGame::FiniteGame(std::vector<std::vector<std::string>> action_labels,
                       std::string name)
    : labels_(std::move(action_labels)), name_(std::move(name)) {
  if (labels_.empty())
    throw std::invalid_argument("action_labels: need at least one player");
  strides_.resize(labels_.size());
  std::size_t stride = 1;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty())
      throw std::invalid_argument("action_labels: empty action set");
    strides_[i] = stride;
    stride *= labels_[i].size();
  }
  payoff_stride_ = stride;
  payoffs_.assign(payoff_stride_ * labels_.size(), 0.0);
}

int FiniteGame::num_actions(int player) const {
  return static_cast<int>(labels_.at(player).size());
}

const std::string& FiniteGame::action_label(int player, int action) const {
  return labels_.at(player).at(action);
}

std::size_t FiniteGame::joint_index(const std::vector<int>& actions) const {
  if (actions.size() != labels_.size())
    throw std::invalid_argument("actions: one entry per player required");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i] < 0 || actions[i] >= num_actions(static_cast<int>(i)))
      throw std::out_of_range("actions: index outside the action set");
    idx += strides_[i] * static_cast<std::size_t>(actions[i]);
  }
  return idx;
}

std::vector<int> FiniteGame::decode(std::size_t joint) const {
  if (joint >= payoff_stride_)
    throw std::out_of_range("joint: index outside the joint-action space");
  std::vector<int> actions(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    actions[i] = static_cast<int>(joint / strides_[i] % labels_[i].size());
  }
  return actions;
}

std::size_t FiniteGame::replace(std::size_t joint, int player,
                                int action) const {
  if (player < 0 || static_cast<std::size_t>(player) >= labels_.size())
    throw std::out_of_range("player: index out of range");
  if (action < 0 || action >= num_actions(player))
    throw std::out_of_range("action: index outside the action set");
  const std::size_t stride = strides_[player];
  const std::size_t count = labels_[player].size();
  const std::size_t current = joint / stride % count;
  return joint + (static_cast<std::size_t>(action) - current) * stride;
}

double FiniteGame::payoff(std::size_t joint, int player) const {
  return payoffs_.at(joint * labels_.size() + player);
}

double FiniteGame::payoff(const std::vector<int>& actions, int player) const {
  return payoff(joint_index(actions), player);
}

void FiniteGame::set_payoff(std::size_t joint, int player, double value) {
  payoffs_.at(joint * labels_.size() + player) = value;
}

nlohmann::json FiniteGame::to_json() const {
  nlohmann::json doc;
  doc["name"] = name_;
  doc["players"] = labels_.size();
  doc["actions"] = labels_;
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t joint = 0; joint < payoff_stride_; ++joint) {
    nlohmann::json cell;
    cell["profile"] = decode(joint);
    nlohmann::json u = nlohmann::json::array();
    for (std::size_t i = 0; i < labels_.size(); ++i)
      u.push_back(payoff(joint, static_cast<int>(i)));
    cell["utility_bit_per_joule"] = u;
    cells.push_back(cell);
  }
  doc["cells"] = cells;
  return doc;
}

std::vector<std::vector<int>> enumerate_pure_equilibria(const FiniteGame& game,
                                                        double tol) {
  if (game.num_joint_actions() > (std::size_t{1} << 20))
    throw std::invalid_argument(
        "game: joint-action space too large to enumerate (> 2^20)");
  std::vector<std::vector<int>> found;
  for (std::size_t joint = 0; joint < game.num_joint_actions(); ++joint) {
    bool stable = true;
    for (int i = 0; stable && i < game.players(); ++i) {
      const double here = game.payoff(joint, i);
      for (int b = 0; b < game.num_actions(i); ++b) {
        if (game.payoff(game.replace(joint, i, b), i) > here + tol) {
          stable = false;
          break;
        }
      }
    }
    if (stable) found.push_back(game.decode(joint));
  }
  return found;
}

namespace {

// Largest four-cycle sum over pairs of unilateral deviations; fills
// `worst` with the attaining cycle.
double max_cycle_sum(const FiniteGame& game, CycleWitness& worst) {
  double max_abs = 0.0;
  const std::size_t joints = game.num_joint_actions();
  for (std::size_t s = 0; s < joints; ++s) {
    for (int i = 0; i < game.players(); ++i) {
      const auto si = game.decode(s)[i];
      for (int ti = si + 1; ti < game.num_actions(i); ++ti) {
        const std::size_t s_ti = game.replace(s, i, ti);
        for (int j = i + 1; j < game.players(); ++j) {
          const int sj = game.decode(s)[j];
          for (int tj = sj + 1; tj < game.num_actions(j); ++tj) {
            const std::size_t s_tj = game.replace(s, j, tj);
            const std::size_t s_titj = game.replace(s_ti, j, tj);
            // Walk s -> s_ti -> s_titj -> s_tj -> s, summing the moving
            // player's payoff change at each leg; exact potentials need 0.
            const double cycle = game.payoff(s_ti, i) - game.payoff(s, i) +
                                 game.payoff(s_titj, j) - game.payoff(s_ti, j) +
                                 game.payoff(s_tj, i) - game.payoff(s_titj, i) +
                                 game.payoff(s, j) - game.payoff(s_tj, j);
            if (std::fabs(cycle) > max_abs) {
              max_abs = std::fabs(cycle);
              worst = CycleWitness{i,  j,  si, ti, sj, tj,
                                   game.decode(s), cycle};
            }
          }
        }
      }
    }
  }
  return max_abs;
}

// Potential by path integration from joint action 0 (all first actions),
// walking one digit at a time toward lower indices.
std::vector<double> integrate_potential(const FiniteGame& game) {
  const std::size_t joints = game.num_joint_actions();
  std::vector<double> v(joints, 0.0);
  for (std::size_t s = 1; s < joints; ++s) {
    const auto digits = game.decode(s);
    int p = 0;
    while (digits[p] == 0) ++p;
    const std::size_t pred = game.replace(s, p, 0);
    v[s] = v[pred] + game.payoff(s, p) - game.payoff(pred, p);
  }
  return v;
}

double max_deviation_mismatch(const FiniteGame& game,
                              const std::vector<double>& v,
                              const std::vector<double>& weights) {
  double worst = 0.0;
  for (std::size_t s = 0; s < game.num_joint_actions(); ++s) {
    const auto digits = game.decode(s);
    for (int i = 0; i < game.players(); ++i) {
      for (int b = 0; b < digits[i]; ++b) {
        const std::size_t t = game.replace(s, i, b);
        const double du = game.payoff(s, i) - game.payoff(t, i);
        const double dv = weights[i] * (v[s] - v[t]);
        worst = std::max(worst, std::fabs(du - dv));
      }
    }
  }
  return worst;
}

}  // namespace

PotentialCheck check_exact_potential(const FiniteGame& game, double tol) {
  if (game.num_joint_actions() > (std::size_t{1} << 20))
    throw std::invalid_argument(
        "game: joint-action space too large for the cycle test (> 2^20)");
  PotentialCheck out;
  out.max_cycle = max_cycle_sum(game, out.worst);
  out.is_potential = out.max_cycle <= tol;
  if (!out.is_potential) return out;
  out.potential = integrate_potential(game);
  const std::vector<double> unit(game.players(), 1.0);
  const double mismatch = max_deviation_mismatch(game, out.potential, unit);
  if (mismatch > tol) {
    out.is_potential = false;
    out.max_cycle = std::max(out.max_cycle, mismatch);
    out.potential.clear();
  }
  return out;
}

PotentialCheck check_weighted_potential(const FiniteGame& game,
                                        const std::vector<double>& weights,
                                        double tol) {
  if (static_cast<int>(weights.size()) != game.players())
    throw std::invalid_argument("weights: one entry per player required");
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (!(weights[i] > 0.0)) {
      std::ostringstream os;
      os << "weights[" << i << "]: must be > 0";
      throw std::invalid_argument(os.str());
    }

  FiniteGame scaled = game;
  for (std::size_t s = 0; s < game.num_joint_actions(); ++s)
    for (int i = 0; i < game.players(); ++i)
      scaled.set_payoff(s, i, game.payoff(s, i) / weights[i]);

  PotentialCheck out = check_exact_potential(scaled, tol);
  if (!out.is_potential) return out;
  const double mismatch =
      max_deviation_mismatch(game, out.potential, weights);
  if (mismatch > tol) {
    out.is_potential = false;
    out.max_cycle = std::max(out.max_cycle, mismatch);
    out.potential.clear();
  }
  return out;
}

}  // namespace eepc
