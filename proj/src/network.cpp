#include "eepc/network.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eepc {

namespace {

void check_positive_vector(const std::vector<double>& v, int players,
                           const char* field) {
  if (static_cast<int>(v.size()) != players) {
    std::ostringstream os;
    os << field << ": expected " << players << " entries, got " << v.size();
    throw std::invalid_argument(os.str());
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0) || !std::isfinite(v[i])) {
      std::ostringstream os;
      os << field << "[" << i << "]: must be finite and > 0";
      throw std::invalid_argument(os.str());
    }
  }
}

}  // namespace

void NetworkConfig::validate() const {
  if (players < 1)
    throw std::invalid_argument("players: must be >= 1");
  check_positive_vector(gain, players, "gain");
  check_positive_vector(rate, players, "rate");
  check_positive_vector(max_power, players, "max_power");
  if (!(noise_power > 0.0) || !std::isfinite(noise_power))
    throw std::invalid_argument("noise_power: must be finite and > 0");
  if (!(sensing_cost >= 0.0) || !(sensing_cost < 1.0))
    throw std::invalid_argument("sensing_cost: must lie in [0, 1)");
  if (!(processing_gain >= 1.0) || !std::isfinite(processing_gain))
    throw std::invalid_argument("processing_gain: must be finite and >= 1");
}

double NetworkConfig::weight(int player) const {
  return rate[player] * gain[player] / noise_power;
}

}  // namespace eepc
