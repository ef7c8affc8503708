#include "eepc/hierarchy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eepc/errors.hpp"

namespace eepc {

RoleOutcome stackelberg_outcome(const NetworkConfig& cfg,
                                const EfficiencyModel& model, int player,
                                Role role, double tol) {
  cfg.validate();
  if (player < 0 || player >= cfg.players)
    throw std::out_of_range("player: index out of range");
  if (cfg.players < 2)
    throw std::invalid_argument("players: hierarchy needs >= 2 players");

  const int k = cfg.players;
  const double beta = solve_beta(model, tol).value;
  const double gamma = solve_gamma(model, k, tol).value;
  const double d = 1.0 - (k - 1) * gamma * beta - (k - 2) * beta;
  if (!(d > 0.0)) {
    std::ostringstream os;
    os << "hierarchical powers undefined: 1-(K-1)*gamma*beta-(K-2)*beta = "
       << d << " <= 0";
    throw InfeasibleError("1-(K-1)*gamma*beta-(K-2)*beta <= 0", os.str());
  }

  RoleOutcome out;
  out.role = role;
  const double scale = cfg.noise_power / cfg.gain[player];
  const double w = cfg.weight(player);
  if (role == Role::Leader) {
    out.sinr_target = gamma;
    out.power = scale * gamma * (1.0 + beta) / d;
    out.utility = w * d / (gamma * (1.0 + beta)) * model.value(gamma);
  } else {
    out.sinr_target = beta;
    out.power = scale * beta * (1.0 + gamma) / d;
    out.utility = (1.0 - cfg.sensing_cost) * w * d / (beta * (1.0 + gamma)) *
                  model.value(beta);
  }
  if (out.power > cfg.max_power[player]) {
    std::ostringstream os;
    os << "hierarchical power " << out.power << " W exceeds max_power["
       << player << "] = " << cfg.max_power[player] << " W";
    throw InfeasibleError("stackelberg-power-saturation", os.str());
  }
  return out;
}

SensingUtilityEvaluator::SensingUtilityEvaluator(const NetworkConfig& cfg,
                                                 const EfficiencyModel& model,
                                                 GammaIndexing indexing,
                                                 double tol)
    : players_(cfg.players),
      processing_gain_(cfg.processing_gain),
      indexing_(indexing) {
  cfg.validate();
  beta_ = solve_beta(model, tol).value;
  f_beta_ = model.value(beta_);
  gamma_.resize(players_ + 2);
  f_gamma_.resize(players_ + 2);
  epsilon_.resize(players_ + 2);
  for (int l = 0; l <= players_ + 1; ++l) {
    epsilon_[l] = epsilon_L(players_, processing_gain_, l, beta_);
    gamma_[l] = solve_sinr_root(model, epsilon_[l], tol).value;
    f_gamma_[l] = model.value(gamma_[l]);
  }
}

double SensingUtilityEvaluator::gamma(int non_sensing) const {
  if (non_sensing < 0 || non_sensing >= static_cast<int>(gamma_.size()))
    throw std::out_of_range("non_sensing: outside the precomputed ladder");
  return gamma_[non_sensing];
}

double SensingUtilityEvaluator::epsilon(int non_sensing) const {
  if (non_sensing < 0 || non_sensing >= static_cast<int>(epsilon_.size()))
    throw std::out_of_range("non_sensing: outside the precomputed ladder");
  return epsilon_[non_sensing];
}

double SensingUtilityEvaluator::shape(SenseAction action, int sensing,
                                      int non_sensing) const {
  if (sensing < 0 || non_sensing < 0 || sensing + non_sensing != players_)
    throw std::invalid_argument(
        "profile: sensing + non_sensing must equal players");
  if (action == SenseAction::Sensing && sensing < 1)
    throw std::invalid_argument("profile: a sensing player needs sensing >= 1");
  if (action == SenseAction::NonSensing && non_sensing < 1)
    throw std::invalid_argument(
        "profile: a non-sensing player needs non_sensing >= 1");

  const double n = processing_gain_;
  const double beta = beta_;
  const int l = non_sensing;

  const auto bracket = [&](double g) {
    return n * n - n * beta - ((n + beta) * l + (sensing + 1) * beta) * g;
  };
  const auto require_positive = [&](double b) {
    if (!(b > 0.0)) {
      std::ostringstream os;
      os << "sensing-stage utility bracket = " << b << " <= 0 at profile (F="
         << sensing << ", L=" << l << ")";
      throw InfeasibleError("utility-bracket <= 0", os.str());
    }
  };

  if (action == SenseAction::Sensing) {
    const double g_next = gamma_[l + 1];
    const double b = bracket(g_next);
    require_positive(b);
    return f_beta_ / (n * beta * (n + g_next)) * b;
  }

  if (indexing_ == GammaIndexing::Verbatim) {
    const double g_next = gamma_[l + 1];
    const double b = bracket(g_next);
    require_positive(b);
    return f_gamma_[l] / (n * g_next * (n + beta)) * b;
  }
  const double g_here = gamma_[l];
  const double b = bracket(g_here);
  require_positive(b);
  return f_gamma_[l] / (n * g_here * (n + beta)) * b;
}

double sensing_utility(const NetworkConfig& cfg, const EfficiencyModel& model,
                       const SensingProfile& profile, int player,
                       SenseAction action, GammaIndexing indexing,
                       double tol) {
  cfg.validate();
  if (player < 0 || player >= cfg.players)
    throw std::out_of_range("player: index out of range");
  SensingUtilityEvaluator eval(cfg, model, indexing, tol);
  return cfg.weight(player) *
         eval.shape(action, profile.sensing, profile.non_sensing);
}

}  // namespace eepc
