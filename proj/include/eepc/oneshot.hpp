#pragma once

#include <vector>

#include "eepc/efficiency.hpp"
#include "eepc/network.hpp"

namespace eepc {

// SINR of `player` under power vector p (W):
//   p_i h_i / (sum_{j != i} p_j h_j + noise_power).
double sinr(const NetworkConfig& cfg, const std::vector<double>& powers,
            int player);

// Energy efficiency rate[i] * f(sinr_i) / p_i in bit/J; 0 at p_i = 0.
double utility(const NetworkConfig& cfg, const EfficiencyModel& model,
               const std::vector<double>& powers, int player);

// Unique non-saturated one-shot equilibrium powers
//   p_i = noise_power/gain_i * beta / (1 - (players-1)*beta).
// Throws InfeasibleError("(K-1)*beta >= 1") when no interior equilibrium
// exists and InfeasibleError("nash-power-saturation") when some p_i exceeds
// its cap.
std::vector<double> nash_powers(const NetworkConfig& cfg,
                                const EfficiencyModel& model,
                                double tol = 1e-12);

// Utilities at the one-shot equilibrium, evaluated in closed form.
std::vector<double> nash_utilities(const NetworkConfig& cfg,
                                   const EfficiencyModel& model,
                                   double tol = 1e-12);

// Capped best response of `player` to the other entries of `powers`:
//   min(max_power_i, beta * (noise + interference) / gain_i).
double best_response(const NetworkConfig& cfg, const EfficiencyModel& model,
                     const std::vector<double>& powers, int player,
                     double tol = 1e-12);

struct BrResult {
  std::vector<double> powers;
  bool converged = false;
  int sweeps = 0;
  bool saturated = false;  // some player ended pinned at its cap
};

// Sequential (ascending-index) best-response sweeps from `initial` until the
// largest per-sweep power change is <= tol or max_sweeps is hit.
BrResult br_dynamics(const NetworkConfig& cfg, const EfficiencyModel& model,
                     std::vector<double> initial, double tol = 1e-10,
                     int max_sweeps = 10000);

}  // namespace eepc
