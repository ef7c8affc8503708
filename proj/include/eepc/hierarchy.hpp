#pragma once

#include <vector>

#include "eepc/efficiency.hpp"
#include "eepc/network.hpp"

namespace eepc {

enum class Role { Leader, Follower };

struct RoleOutcome {
  Role role;
  double power = 0.0;        // W
  double sinr_target = 0.0;  // gamma for the leader, beta for followers
  double utility = 0.0;      // bit/J, sensing cost applied to followers
};

// Hierarchical (one leader, players-1 followers) equilibrium outcome for
// `player` acting in `role`. With common denominator
//   D = 1 - (K-1)*gamma*beta - (K-2)*beta,
// the leader transmits noise/gain * gamma*(1+beta)/D and followers
// noise/gain * beta*(1+gamma)/D. Follower utility carries the (1-alpha)
// sensing discount; the leader transmits during the sensing slot and pays
// no discount. Throws InfeasibleError when D <= 0.
RoleOutcome stackelberg_outcome(const NetworkConfig& cfg,
                                const EfficiencyModel& model, int player,
                                Role role, double tol = 1e-12);

enum class SenseAction { NonSensing = 0, Sensing = 1 };

// Anonymous description of a sensing profile: `sensing` + `non_sensing`
// must equal the player count. Counts include the player under evaluation.
struct SensingProfile {
  int sensing = 0;
  int non_sensing = 0;
};

// Index convention for the follower target gamma_L inside the non-sensing
// utility. Verbatim keeps the mixed indexing of the closed forms (gamma_{L+1}
// in the prefactor and bracket, gamma_L only inside f); Consistent uses
// gamma_L throughout the non-sensing expression.
enum class GammaIndexing { Verbatim, Consistent };

// Precomputes beta and the gamma_L ladder once, then evaluates the
// closed-form sensing-stage utilities for any profile. Throws
// InfeasibleError from construction or evaluation when a required
// denominator or the shared bracket term is not positive.
class SensingUtilityEvaluator {
 public:
  SensingUtilityEvaluator(const NetworkConfig& cfg,
                          const EfficiencyModel& model,
                          GammaIndexing indexing = GammaIndexing::Verbatim,
                          double tol = 1e-12);

  // Per-unit-weight utility of a player taking `action` in a profile with
  // `sensing` + `non_sensing` = players (counts include that player).
  double shape(SenseAction action, int sensing, int non_sensing) const;

  double beta() const { return beta_; }
  double gamma(int non_sensing) const;    // gamma_L, 0 <= L <= players
  double epsilon(int non_sensing) const;  // damping for gamma_L
  GammaIndexing indexing() const { return indexing_; }

 private:
  int players_;
  double processing_gain_;
  GammaIndexing indexing_;
  double beta_;
  double f_beta_;
  std::vector<double> gamma_;    // index = non-sensing count
  std::vector<double> f_gamma_;
  std::vector<double> epsilon_;
};

// Convenience wrapper: utility of `player` (in bit/J) for one profile.
double sensing_utility(const NetworkConfig& cfg, const EfficiencyModel& model,
                       const SensingProfile& profile, int player,
                       SenseAction action,
                       GammaIndexing indexing = GammaIndexing::Verbatim,
                       double tol = 1e-12);

}  // namespace eepc
