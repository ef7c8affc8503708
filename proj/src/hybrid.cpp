#include "eepc/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "eepc/errors.hpp"
#include "eepc/kernels.hpp"
#include "eepc/oneshot.hpp"
#include "eepc/two_player.hpp"

namespace eepc {

std::vector<double> geometric_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo))
    throw std::invalid_argument("grid: need 0 < min_power < max_power");
  if (n < 2) throw std::invalid_argument("grid.points: must be >= 2");
  std::vector<double> g(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int k = 0; k < n; ++k) g[k] = lo * std::exp(step * k);
  g.front() = lo;
  g.back() = hi;
  return g;
}

namespace {

void snap_nearest(std::vector<double>& grid, double target) {
  if (target < grid.front() || target > grid.back()) return;
  std::size_t best = 0;
  double dist = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double d = std::fabs(std::log(grid[k] / target));
    if (d < dist) {
      dist = d;
      best = k;
    }
  }
  grid[best] = target;
}

std::string power_label(bool sense, double watts) {
  std::ostringstream os;
  os << (sense ? "S" : "NS") << ":p=";
  os.precision(6);
  os << watts;
  return os.str();
}

}  // namespace

HybridGame build_hybrid_game(const NetworkConfig& cfg,
                             const EfficiencyModel& model,
                             const GridSpec& spec) {
  cfg.validate();
  if (cfg.players != 2)
    throw std::invalid_argument("players: the hybrid game needs exactly 2");
  if (spec.points < 2 || spec.points > 512)
    throw std::invalid_argument("grid.points: must lie in [2, 512]");

  std::vector<double> nash;
  try {
    nash = nash_powers(cfg, model);
  } catch (const InfeasibleError&) {
    // Grid bounds must then be explicit; snapping is skipped.
  }

  double lo = spec.min_power, hi = spec.max_power;
  if (lo <= 0.0 || hi <= 0.0) {
    if (nash.empty())
      throw InfeasibleError(
          "hybrid-grid-underdetermined",
          "one-shot equilibrium infeasible; set grid.min_power and "
          "grid.max_power explicitly");
    const double p_lo = *std::min_element(nash.begin(), nash.end());
    const double p_hi = *std::max_element(nash.begin(), nash.end());
    const double cap = *std::min_element(cfg.max_power.begin(),
                                         cfg.max_power.end());
    if (lo <= 0.0) lo = p_lo / 100.0;
    if (hi <= 0.0) hi = std::min(3.0 * p_hi, cap);
  }

  std::array<std::vector<double>, 2> grid;
  for (int i = 0; i < 2; ++i) {
    grid[i] = geometric_grid(lo, hi, spec.points);
    if (spec.include_nash && !nash.empty()) snap_nearest(grid[i], nash[i]);
  }

  std::vector<std::vector<std::string>> labels(2);
  for (int i = 0; i < 2; ++i) {
    for (int sense = 0; sense < 2; ++sense)
      for (double p : grid[i]) labels[i].push_back(power_label(sense != 0, p));
  }

  // Per-player efficiency surface over (own power, opponent power); the
  // sensing bits only rescale rows, so the surface is computed once per
  // player with the batch kernel.
  const int n = spec.points;
  std::array<std::vector<double>, 2> surface;
  for (int i = 0; i < 2; ++i) {
    surface[i].resize(static_cast<std::size_t>(n) * n);
    kernels::utility_grid(model, cfg.rate[i], cfg.gain[i], cfg.gain[1 - i],
                          cfg.noise_power, grid[i], grid[1 - i], surface[i]);
  }

  FiniteGame game(std::move(labels), "hybrid");
  const double discount = 1.0 - cfg.sensing_cost;
  for (int a0 = 0; a0 < 2 * n; ++a0) {
    const int k0 = a0 % n;
    const bool s0 = a0 >= n;
    for (int a1 = 0; a1 < 2 * n; ++a1) {
      const int k1 = a1 % n;
      const bool s1 = a1 >= n;
      const std::size_t joint = game.joint_index({a0, a1});
      const double u0 = surface[0][static_cast<std::size_t>(k1) * n + k0];
      const double u1 = surface[1][static_cast<std::size_t>(k0) * n + k1];
      game.set_payoff(joint, 0, s0 ? discount * u0 : u0);
      game.set_payoff(joint, 1, s1 ? discount * u1 : u1);
    }
  }
  return HybridGame{std::move(game), std::move(grid), cfg.sensing_cost};
}

DominanceReport dominance_check(const HybridGame& hybrid) {
  DominanceReport out;
  out.min_margin = std::numeric_limits<double>::infinity();
  const FiniteGame& game = hybrid.game;
  for (int i = 0; i < 2; ++i) {
    const int n = hybrid.grid_points(i);
    for (int k = 0; k < n; ++k) {
      for (int b = 0; b < game.num_actions(1 - i); ++b) {
        std::vector<int> cell(2);
        cell[1 - i] = b;
        cell[i] = k;  // non-sensing variant
        const double u_ns = game.payoff(cell, i);
        cell[i] = n + k;  // sensing variant, same power
        const double u_s = game.payoff(cell, i);
        out.min_margin = std::min(out.min_margin, u_ns - u_s);
      }
    }
  }
  out.strict = out.min_margin > 0.0;
  return out;
}

std::vector<std::vector<int>> hybrid_equilibria(const HybridGame& hybrid,
                                                double tol) {
  return enumerate_pure_equilibria(hybrid.game, tol);
}

FiniteGame drop_sensing_actions(const HybridGame& hybrid) {
  std::vector<std::vector<std::string>> labels(2);
  for (int i = 0; i < 2; ++i) {
    const int n = hybrid.grid_points(i);
    for (int k = 0; k < n; ++k)
      labels[i].push_back(hybrid.game.action_label(i, k));
  }
  FiniteGame sub(std::move(labels), "hybrid-power-only");
  for (int k0 = 0; k0 < hybrid.grid_points(0); ++k0)
    for (int k1 = 0; k1 < hybrid.grid_points(1); ++k1) {
      const std::size_t joint = sub.joint_index({k0, k1});
      for (int i = 0; i < 2; ++i)
        sub.set_payoff(joint, i, hybrid.game.payoff({k0, k1}, i));
    }
  return sub;
}

nlohmann::json DominanceReport::to_json() const {
  return {{"min_margin_bit_per_joule", min_margin}, {"strict", strict}};
}

namespace {

std::string pareto_verdict(const std::array<double, 2>& candidate,
                           const std::array<double, 2>& reference) {
  const double tol = 1e-9;
  const bool ge = candidate[0] >= reference[0] - tol &&
                  candidate[1] >= reference[1] - tol;
  const bool le = candidate[0] <= reference[0] + tol &&
                  candidate[1] <= reference[1] + tol;
  if (ge && le) return "coincides";
  if (ge) return "pareto_dominates_hybrid";
  if (le) return "pareto_dominated_by_hybrid";
  return "incomparable";
}

}  // namespace

ParadoxReport paradox_report(const NetworkConfig& cfg,
                             const EfficiencyModel& model, double alpha,
                             const GridSpec& spec) {
  cfg.validate();
  if (cfg.players != 2)
    throw std::invalid_argument("players: the paradox report needs exactly 2");
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha: must lie in [0, 1)");

  NetworkConfig run = cfg;
  run.sensing_cost = alpha;

  const HybridGame hybrid = build_hybrid_game(run, model, spec);
  const auto equilibria = hybrid_equilibria(hybrid);
  if (equilibria.empty())
    throw InfeasibleError("hybrid-no-pure-equilibrium",
                          "the discretized hybrid game has no pure "
                          "equilibrium; refine the power grid");

  ParadoxReport report;
  report.num_hybrid_equilibria = equilibria.size();
  // Grid quantization can stabilize extra profiles just below the one-shot
  // powers; the canonical prediction is the equilibrium nearest to them.
  std::size_t pick = 0;
  std::vector<double> nash;
  try {
    nash = nash_powers(run, model);
  } catch (const InfeasibleError&) {
  }
  if (!nash.empty()) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < equilibria.size(); ++e) {
      double dist = 0.0;
      for (int i = 0; i < 2; ++i)
        dist += std::fabs(
            std::log(hybrid.power_of(i, equilibria[e][i]) / nash[i]));
      if (dist < best - 1e-15) {
        best = dist;
        pick = e;
      }
    }
  }
  const auto& ne = equilibria[pick];
  for (int i = 0; i < 2; ++i) {
    report.ne_sense[i] = hybrid.senses(i, ne[i]) ? 1 : 0;
    report.ne_power[i] = hybrid.power_of(i, ne[i]);
    report.ne_utility[i] = hybrid.game.payoff(ne, i);
  }
  report.min_dominance_margin = dominance_check(hybrid).min_margin;

  double step = 0.0;
  for (int i = 0; i < 2; ++i)
    for (std::size_t k = 1; k < hybrid.grid[i].size(); ++k)
      step = std::max(step,
                      hybrid.grid[i][k] / hybrid.grid[i][k - 1] - 1.0);
  report.grid_step = step;

  const SensingMatrix2x2 matrix = build_matrix(run, model);
  const EquilibriumReport stage = classify_equilibria(matrix);
  report.sensing_regime = stage.regime;

  const auto add_outcome = [&](const std::string& label, double u0,
                               double u1) {
    OutcomeComparison cmp;
    cmp.label = label;
    cmp.utility = {u0, u1};
    cmp.verdict = pareto_verdict(cmp.utility, report.ne_utility);
    report.two_stage.push_back(std::move(cmp));
  };
  if (stage.regime == EquilibriumClass::Unique) {
    add_outcome("(NS,NS)", matrix.u[0][0][0], matrix.u[1][0][0]);
  } else {
    add_outcome("(NS,S)", matrix.u[0][0][1], matrix.u[1][0][1]);
    add_outcome("(S,NS)", matrix.u[0][1][0], matrix.u[1][1][0]);
  }

  bool all_dominate = true, all_coincide = true;
  for (const auto& cmp : report.two_stage) {
    if (cmp.verdict != "pareto_dominates_hybrid") all_dominate = false;
    if (cmp.verdict != "coincides") all_coincide = false;
  }
  report.verdict = all_dominate ? "paradox"
                   : all_coincide ? "coincide"
                                  : "mixed";
  return report;
}

nlohmann::json ParadoxReport::to_json() const {
  nlohmann::json doc;
  doc["hybrid"] = {
      {"sense", ne_sense},
      {"power_watts", ne_power},
      {"utility_bit_per_joule", ne_utility},
      {"num_pure_equilibria", num_hybrid_equilibria},
      {"min_dominance_margin_bit_per_joule", min_dominance_margin},
      {"max_grid_step_rel", grid_step},
  };
  doc["sensing_regime"] = to_string(sensing_regime);
  nlohmann::json outcomes = nlohmann::json::array();
  for (const auto& cmp : two_stage)
    outcomes.push_back({{"label", cmp.label},
                        {"utility_bit_per_joule", cmp.utility},
                        {"verdict", cmp.verdict}});
  doc["two_stage"] = outcomes;
  doc["verdict"] = verdict;
  return doc;
}

}  // namespace eepc
