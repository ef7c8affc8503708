#include "eepc/oneshot.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eepc/errors.hpp"

namespace eepc {

namespace {

void check_powers(const NetworkConfig& cfg, const std::vector<double>& p) {
  if (static_cast<int>(p.size()) != cfg.players) {
    std::ostringstream os;
    os << "powers: expected " << cfg.players << " entries, got " << p.size();
    throw std::invalid_argument(os.str());
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0) || !std::isfinite(p[i])) {
      std::ostringstream os;
      os << "powers[" << i << "]: must be finite and >= 0";
      throw std::invalid_argument(os.str());
    }
    if (p[i] > cfg.max_power[i] * (1.0 + 1e-12)) {
      std::ostringstream os;
      os << "powers[" << i << "]: exceeds max_power[" << i << "]";
      throw std::invalid_argument(os.str());
    }
  }
}

void check_player(const NetworkConfig& cfg, int player) {
  if (player < 0 || player >= cfg.players)
    throw std::out_of_range("player: index out of range");
}

double interference(const NetworkConfig& cfg, const std::vector<double>& p,
                    int player) {
  double acc = 0.0;
  for (int j = 0; j < cfg.players; ++j)
    if (j != player) acc += p[j] * cfg.gain[j];
  return acc;
}

}  // namespace

double sinr(const NetworkConfig& cfg, const std::vector<double>& powers,
            int player) {
  cfg.validate();
  check_powers(cfg, powers);
  check_player(cfg, player);
  return powers[player] * cfg.gain[player] /
         (interference(cfg, powers, player) + cfg.noise_power);
}

double utility(const NetworkConfig& cfg, const EfficiencyModel& model,
               const std::vector<double>& powers, int player) {
  cfg.validate();
  check_powers(cfg, powers);
  check_player(cfg, player);
  const double p = powers[player];
  if (p == 0.0) return 0.0;
  const double x = p * cfg.gain[player] /
                   (interference(cfg, powers, player) + cfg.noise_power);
  return cfg.rate[player] * model.value(x) / p;
}

std::vector<double> nash_powers(const NetworkConfig& cfg,
                                const EfficiencyModel& model, double tol) {
  cfg.validate();
  const double beta = solve_beta(model, tol).value;
  const double denom = 1.0 - (cfg.players - 1) * beta;
  if (!(denom > 0.0)) {
    std::ostringstream os;
    os << "no interior equilibrium: (K-1)*beta = " << (cfg.players - 1) * beta
       << " >= 1";
    throw InfeasibleError("(K-1)*beta >= 1", os.str());
  }
  std::vector<double> p(cfg.players);
  for (int i = 0; i < cfg.players; ++i) {
    p[i] = cfg.noise_power / cfg.gain[i] * beta / denom;
    if (p[i] > cfg.max_power[i]) {
      std::ostringstream os;
      os << "equilibrium power " << p[i] << " W exceeds max_power[" << i
         << "] = " << cfg.max_power[i] << " W";
      throw InfeasibleError("nash-power-saturation", os.str());
    }
  }
  return p;
}

std::vector<double> nash_utilities(const NetworkConfig& cfg,
                                   const EfficiencyModel& model, double tol) {
  cfg.validate();
  const double beta = solve_beta(model, tol).value;
  const double denom = 1.0 - (cfg.players - 1) * beta;
  if (!(denom > 0.0))
    throw InfeasibleError("(K-1)*beta >= 1",
                          "no interior equilibrium for these parameters");
  std::vector<double> u(cfg.players);
  const double shape = model.value(beta) * denom / beta;
  for (int i = 0; i < cfg.players; ++i) u[i] = cfg.weight(i) * shape;
  return u;
}

double best_response(const NetworkConfig& cfg, const EfficiencyModel& model,
                     const std::vector<double>& powers, int player,
                     double tol) {
  cfg.validate();
  check_powers(cfg, powers);
  check_player(cfg, player);
  const double beta = solve_beta(model, tol).value;
  const double target = beta *
                        (cfg.noise_power + interference(cfg, powers, player)) /
                        cfg.gain[player];
  return std::min(target, cfg.max_power[player]);
}

BrResult br_dynamics(const NetworkConfig& cfg, const EfficiencyModel& model,
                     std::vector<double> initial, double tol, int max_sweeps) {
  cfg.validate();
  check_powers(cfg, initial);
  if (!(tol > 0.0)) throw std::invalid_argument("tol: must be > 0");
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps: must be >= 1");

  const double beta = solve_beta(model).value;
  BrResult out;
  out.powers = std::move(initial);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double delta = 0.0;
    for (int i = 0; i < cfg.players; ++i) {
      const double target =
          beta * (cfg.noise_power + interference(cfg, out.powers, i)) /
          cfg.gain[i];
      const double next = std::min(target, cfg.max_power[i]);
      delta = std::max(delta, std::fabs(next - out.powers[i]));
      out.powers[i] = next;
    }
    out.sweeps = sweep + 1;
    if (delta <= tol) {
      out.converged = true;
      break;
    }
  }
  for (int i = 0; i < cfg.players; ++i)
    if (out.powers[i] >= cfg.max_power[i]) out.saturated = true;
  return out;
}

}  // namespace eepc
