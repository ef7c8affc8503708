#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "eepc/efficiency.hpp"
#include "eepc/finite_game.hpp"
#include "eepc/network.hpp"

namespace eepc {

// 2x2 sense/not-sense matrix game. Action order is NS = 0, S = 1.
// u[i][a0][a1] is player i's payoff (bit/J) when player 0 plays a0 and
// player 1 plays a1. Off-diagonal cells resolve hierarchically: the sensing
// player becomes the follower (discounted by 1-alpha), the non-sensing
// player leads. (S,S) yields the discounted one-shot outcome, (NS,NS) the
// undiscounted one.
struct SensingMatrix2x2 {
  std::array<std::array<std::array<double, 2>, 2>, 2> u{};
  double beta = 0.0;
  double gamma = 0.0;
  double f_beta = 0.0;
  double f_gamma = 0.0;
  double alpha = 0.0;
  std::array<double, 2> weight{};

  nlohmann::json to_json() const;
};

SensingMatrix2x2 build_matrix(const NetworkConfig& cfg,
                              const EfficiencyModel& model,
                              double tol = 1e-12);

// Sensing-cost threshold below which both off-diagonal profiles are strict
// pure equilibria: (beta - gamma) / (1 - beta*gamma).
double alpha_threshold_three_equilibria(const SensingMatrix2x2& m);

// Threshold below which a follower prefers following over the discounted
// one-shot fallback.
double alpha_threshold_follower_gain(const SensingMatrix2x2& m);

enum class EquilibriumClass { Three, Unique, Continuum };

struct MixedProfile {
  // Probability each player puts on NS (action 0).
  std::array<double, 2> p_ns{};
  std::array<double, 2> value{};  // expected utilities, bit/J
};

// Fully mixed equilibrium by indifference. Throws
// std::domain_error("no-interior-solution") when either indifference
// probability falls outside [0, 1].
MixedProfile mixed_equilibrium(const SensingMatrix2x2& m);

struct EquilibriumReport {
  EquilibriumClass regime;
  double alpha = 0.0;
  double threshold_three = 0.0;
  double threshold_follower = 0.0;
  std::vector<std::array<int, 2>> pure;  // by deviation check
  bool has_mixed = false;
  MixedProfile mixed{};
  std::vector<std::string> findings;  // deviations from the predicted set

  nlohmann::json to_json() const;
};

// Classifies by alpha against the three-equilibria threshold (1e-9 boundary
// band -> Continuum), enumerates pure equilibria by deviation check, and
// attaches the mixed profile when one exists. Disagreements between the
// empirical pure set and the regime's predicted set land in `findings`.
EquilibriumReport classify_equilibria(const SensingMatrix2x2& m,
                                      double tol = 1e-12);

// View as a 2-player FiniteGame (action labels "NS", "S").
FiniteGame to_finite_game(const SensingMatrix2x2& m);

const char* to_string(EquilibriumClass c);

}  // namespace eepc
