#pragma once

#include <vector>

#include "eepc/efficiency.hpp"
#include "eepc/finite_game.hpp"
#include "eepc/hierarchy.hpp"
#include "eepc/network.hpp"

namespace eepc {

// Binary sensing game over all players: action 0 = NS, action 1 = S,
// payoffs from the closed-form sensing-stage utilities. Anonymous in the
// sense that payoffs depend on opponents only through the sensing count.
FiniteGame build_sensing_game(const NetworkConfig& cfg,
                              const EfficiencyModel& model,
                              GammaIndexing indexing = GammaIndexing::Verbatim,
                              double tol = 1e-12);

struct PotentialTable {
  std::vector<double> phi;       // indexed by sensing count 0..players
  std::vector<double> weights;   // per-player utility scales w_i
  bool equal_weights = false;    // phi is in utility units when true,
                                 // per-unit-weight otherwise
};

// Congestion-style potential
//   phi(F) = sum_{i=1..F} shape_S(i, K-i) + sum_{j=1..K-F} shape_NS(K-j, j),
// built from the per-unit-weight utilities. A unilateral NS->S flip changes
// phi by exactly the deviator's per-weight utility change.
PotentialTable rosenthal_potential(const NetworkConfig& cfg,
                                   const EfficiencyModel& model,
                                   GammaIndexing indexing = GammaIndexing::Verbatim,
                                   double tol = 1e-12);

// Sensing counts maximizing phi (ties within 1e-12 relative). Local argmax
// of the potential is a pure equilibrium; the returned set is the global
// argmax, reported as sensing counts.
std::vector<int> pure_equilibria_by_potential(const PotentialTable& table);

}  // namespace eepc
