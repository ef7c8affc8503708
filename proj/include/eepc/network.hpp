#pragma once

#include <vector>

namespace eepc {

// Static description of one interference channel: `players` transmitters
// sharing a band toward a common receiver. `gain[i]` is the channel power
// gain |g_i|^2 (dimensionless), `rate[i]` the information rate in bit/s,
// `noise_power` the receiver noise variance in W, `max_power[i]` the
// transmit cap in W. `sensing_cost` is the fraction of each block spent
// sensing (payoff scaling 1-alpha), and `processing_gain` the spreading
// factor entering the sensing-stage utilities.
struct NetworkConfig {
  int players = 0;
  std::vector<double> gain;
  std::vector<double> rate;
  double noise_power = 0.0;
  std::vector<double> max_power;
  double sensing_cost = 0.0;
  double processing_gain = 1.0;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  // Utility scale w_i = rate[i] * gain[i] / noise_power, in bit/J.
  double weight(int player) const;
};

}  // namespace eepc
