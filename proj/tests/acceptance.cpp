// End-to-end acceptance gate. Nine numbered checks, one [PASS]/[FAIL] line
// each; exit status 1 when any check fails. Checks 1-8 exercise the library
// against independent closed forms and brute-force oracles; check 9 drives
// the CLI binary as a subprocess.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eepc/correlated.hpp"
#include "eepc/efficiency.hpp"
#include "eepc/errors.hpp"
#include "eepc/finite_game.hpp"
#include "eepc/hybrid.hpp"
#include "eepc/oneshot.hpp"
#include "eepc/run_config.hpp"
#include "eepc/sensing_game.hpp"
#include "eepc/two_player.hpp"

namespace {

using eepc::EfficiencyModel;
using eepc::NetworkConfig;
using nlohmann::json;

struct Options {
  std::string cli;
  std::string config;
  std::string scratch;
};

// Accumulates sub-checks; keeps the first failing description for the report
// and tracks named extremes for the passing summary.
class Gate {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond && failure_.empty()) failure_ = what;
  }
  void track(const std::string& name, double value) {
    auto [it, inserted] = extremes_.try_emplace(name, value);
    if (!inserted) it->second = std::max(it->second, value);
  }
  bool ok() const { return failure_.empty(); }
  std::string summary() const {
    if (!failure_.empty()) return failure_;
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : extremes_) {
      if (!first) os << ", ";
      first = false;
      os << name << " " << std::scientific << value;
    }
    return os.str();
  }

 private:
  std::string failure_;
  std::map<std::string, double> extremes_;
};

NetworkConfig symmetric_pair(double alpha) {
  NetworkConfig net;
  net.players = 2;
  net.gain = {1.0, 1.0};
  net.rate = {1.0, 1.0};
  net.noise_power = 0.1;
  net.max_power = {1.0, 1.0};
  net.sensing_cost = alpha;
  net.processing_gain = 10.0;
  return net;
}

int popcount(const std::vector<int>& profile) {
  int n = 0;
  for (int a : profile) n += a;
  return n;
}

// ---------------------------------------------------------------------------

Gate criterion_roots() {
  Gate g;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> draw_a(0.05, 0.95);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = draw_a(rng);
    const auto model = EfficiencyModel::exp_ratio(a);
    const auto beta = eepc::solve_beta(model);
    const auto gamma = eepc::solve_gamma(model, 2);
    g.track("max beta err", std::fabs(beta.value - a));
    g.track("max gamma err", std::fabs(gamma.value - a / (1.0 + a * a)));
    g.track("max residual",
            std::max(std::fabs(beta.residual), std::fabs(gamma.residual)));
    g.require(std::fabs(beta.value - a) <= 1e-9, "beta root off closed form");
    g.require(std::fabs(gamma.value - a / (1.0 + a * a)) <= 1e-9,
              "two-player gamma root off closed form");
    g.require(std::fabs(beta.residual) <= 1e-10 &&
                  std::fabs(gamma.residual) <= 1e-10,
              "root residual above 1e-10");
  }
  return g;
}

Gate criterion_best_response() {
  Gate g;
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int players = 2 + static_cast<int>(rng() % 5);
    // Keep (players-1)*beta <= 0.8 so the interior equilibrium exists with
    // margin and no transmitter saturates.
    const double a = 0.05 + (0.8 / (players - 1) - 0.05) * unit(rng);
    NetworkConfig net;
    net.players = players;
    net.noise_power = 0.05 + 0.45 * unit(rng);
    for (int i = 0; i < players; ++i) {
      net.gain.push_back(0.5 + 1.5 * unit(rng));
      net.rate.push_back(0.5 + 1.5 * unit(rng));
      net.max_power.push_back(100.0);
    }
    const auto model = EfficiencyModel::exp_ratio(a);
    const double beta = eepc::solve_beta(model).value;
    const auto closed = eepc::nash_powers(net, model);
    const auto br = eepc::br_dynamics(
        net, model, std::vector<double>(players, 0.0), 1e-12);
    g.require(br.converged, "best-response dynamics did not converge");
    g.require(!br.saturated, "best-response dynamics hit a power cap");
    for (int i = 0; i < players; ++i) {
      g.track("max power gap W", std::fabs(br.powers[i] - closed[i]));
      g.track("max sinr err", std::fabs(eepc::sinr(net, closed, i) - beta));
      g.require(std::fabs(br.powers[i] - closed[i]) <= 1e-6,
                "dynamics disagree with closed-form powers");
      g.require(std::fabs(eepc::sinr(net, closed, i) - beta) <= 1e-9,
                "equilibrium SINR off the selfish target");
    }
  }
  return g;
}

Gate criterion_weighted_potential() {
  Gate g;
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int players = 2 + static_cast<int>(rng() % 5);
    NetworkConfig net;
    net.players = players;
    net.noise_power = 0.05 + 0.45 * unit(rng);
    net.processing_gain = 8.0 + 22.0 * unit(rng);
    for (int i = 0; i < players; ++i) {
      net.gain.push_back(0.5 + 1.5 * unit(rng));
      net.rate.push_back(0.5 + 1.5 * unit(rng));
      net.max_power.push_back(1.0);
    }
    const auto model =
        EfficiencyModel::exp_ratio(0.05 + 0.9 * unit(rng));

    const auto game = eepc::build_sensing_game(net, model);
    std::vector<double> weights(players);
    for (int i = 0; i < players; ++i) weights[i] = net.weight(i);
    const auto check = eepc::check_weighted_potential(game, weights, 1e-9);
    g.track("max cycle", check.max_cycle);
    g.require(check.is_potential, "weighted four-cycle condition failed");
    if (!check.is_potential) return g;

    // Independent deviation audit: every unilateral move must satisfy
    // dU_i = w_i * dV against the integrated potential.
    for (std::size_t s = 0; s < game.num_joint_actions(); ++s)
      for (int i = 0; i < players; ++i)
        for (int b = 0; b < 2; ++b) {
          const std::size_t t = game.replace(s, i, b);
          const double du = game.payoff(t, i) - game.payoff(s, i);
          const double dv = check.potential[t] - check.potential[s];
          g.track("max dU-w*dV", std::fabs(du - weights[i] * dv));
          g.require(std::fabs(du - weights[i] * dv) <= 1e-9,
                    "deviation gain disagrees with weighted potential");
        }

    // Equal utility scales: the raw game is an exact potential game.
    NetworkConfig flat = net;
    flat.gain.assign(players, 1.0);
    flat.rate.assign(players, 1.0);
    const auto flat_game = eepc::build_sensing_game(flat, model);
    g.require(eepc::check_exact_potential(flat_game, 1e-9).is_potential,
              "equal-weight game failed the exact four-cycle condition");
  }
  return g;
}

Gate criterion_potential_argmax() {
  Gate g;
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int players = 2 + static_cast<int>(rng() % 7);
    NetworkConfig net;
    net.players = players;
    net.noise_power = 0.05 + 0.45 * unit(rng);
    net.processing_gain = 10.0 + 30.0 * unit(rng);
    net.gain.assign(players, 1.0);
    net.rate.assign(players, 1.0);
    net.max_power.assign(players, 1.0);
    const auto model =
        EfficiencyModel::exp_ratio(0.05 + 0.9 * unit(rng));

    const auto game = eepc::build_sensing_game(net, model);
    const auto enumerated = eepc::enumerate_pure_equilibria(game);
    const auto table = eepc::rosenthal_potential(net, model);
    const auto argmax = eepc::pure_equilibria_by_potential(table);
    const std::set<int> argmax_counts(argmax.begin(), argmax.end());

    std::set<std::vector<int>> by_enumeration(enumerated.begin(),
                                              enumerated.end());
    std::set<std::vector<int>> by_potential;
    for (std::size_t s = 0; s < game.num_joint_actions(); ++s) {
      const auto profile = game.decode(s);
      if (argmax_counts.count(popcount(profile)))
        by_potential.insert(profile);
    }
    g.require(by_enumeration == by_potential,
              "potential argmax profiles differ from enumerated equilibria");
    g.track("max eq count", static_cast<double>(by_enumeration.size()));
  }
  return g;
}

Gate criterion_thresholds(const eepc::RunConfig& cfg) {
  Gate g;
  const auto classify_at = [&](double alpha) {
    NetworkConfig net = cfg.network;
    net.sensing_cost = alpha;
    const auto m = eepc::build_matrix(net, cfg.model);
    return eepc::classify_equilibria(m).regime;
  };
  g.require(classify_at(0.125 - 1e-6) == eepc::EquilibriumClass::Three,
            "alpha below threshold not classified as three-equilibria");
  g.require(classify_at(0.125 + 1e-6) == eepc::EquilibriumClass::Unique,
            "alpha above threshold not classified as unique");
  g.require(classify_at(0.125) == eepc::EquilibriumClass::Continuum,
            "boundary alpha not flagged as continuum");

  // Empirical flip: bisect on the sign of the gain from sensing against a
  // non-sensing opponent; it must land on the closed-form threshold.
  const auto deviation_gain = [&](double alpha) {
    NetworkConfig net = cfg.network;
    net.sensing_cost = alpha;
    const auto m = eepc::build_matrix(net, cfg.model);
    return m.u[0][1][0] - m.u[0][0][0];
  };
  double lo = 0.0, hi = 0.3;
  g.require(deviation_gain(lo) > 0.0 && deviation_gain(hi) < 0.0,
            "deviation gain does not change sign on [0, 0.3]");
  for (int it = 0; it < 50; ++it) {
    const double mid = 0.5 * (lo + hi);
    (deviation_gain(mid) > 0.0 ? lo : hi) = mid;
  }
  g.track("flip localization err", std::fabs(0.5 * (lo + hi) - 0.125));
  g.require(std::fabs(0.5 * (lo + hi) - 0.125) <= 1e-6,
            "empirical flip not within 1e-6 of the closed-form threshold");

  // Boolean equivalences: threshold comparisons must agree with direct
  // payoff comparisons on random (a, alpha) samples.
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> draw_a(0.05, 0.95);
  std::uniform_real_distribution<double> draw_alpha(0.0, 0.8);
  int disagreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    NetworkConfig net = symmetric_pair(draw_alpha(rng));
    const auto model = EfficiencyModel::exp_ratio(draw_a(rng));
    const auto m = eepc::build_matrix(net, model);
    const bool below_three =
        net.sensing_cost < eepc::alpha_threshold_three_equilibria(m);
    const bool below_follow =
        net.sensing_cost < eepc::alpha_threshold_follower_gain(m);
    if (below_three != (m.u[0][1][0] > m.u[0][0][0])) ++disagreements;
    if (below_follow != (m.u[0][1][0] > m.u[0][0][1])) ++disagreements;
  }
  g.track("threshold disagreements", static_cast<double>(disagreements));
  g.require(disagreements == 0,
            "threshold inequalities disagree with payoff comparisons");
  return g;
}

Gate criterion_mixed(const eepc::RunConfig& cfg) {
  Gate g;
  const auto m = eepc::build_matrix(cfg.network, cfg.model);
  const auto report = eepc::classify_equilibria(m);
  g.require(report.has_mixed, "no mixed equilibrium on the reference pair");
  if (!report.has_mixed) return g;

  const double p_ref = 0.50771545614007820499;
  const double u_ref = 3.7483392259358022109;
  for (int i = 0; i < 2; ++i) {
    g.track("max p_ns err", std::fabs(report.mixed.p_ns[i] - p_ref));
    g.track("max value err", std::fabs(report.mixed.value[i] - u_ref));
    g.require(std::fabs(report.mixed.p_ns[i] - p_ref) <= 1e-9,
              "mixed profile off the closed form");
    g.require(std::fabs(report.mixed.value[i] - u_ref) <= 1e-9,
              "mixed value off the closed form");
    g.require(std::fabs(report.mixed.p_ns[i] - 0.508) <= 1e-3,
              "mixed profile outside the published 0.508 band");
    g.require(std::fabs(report.mixed.value[i] - 3.749) <= 1e-3,
              "mixed value outside the published 3.749 band");
  }

  // Independent 2x2 indifference solve straight from the matrix cells:
  // opponent NS-probability q makes a player indifferent between rows.
  const double q = (m.u[0][1][1] - m.u[0][0][1]) /
                   ((m.u[0][0][0] - m.u[0][1][0]) +
                    (m.u[0][1][1] - m.u[0][0][1]));
  const double value = q * m.u[0][0][0] + (1.0 - q) * m.u[0][0][1];
  g.require(std::fabs(q - report.mixed.p_ns[1]) <= 1e-12,
            "independent indifference solve disagrees on the profile");
  g.require(std::fabs(value - report.mixed.value[0]) <= 1e-9,
            "independent indifference solve disagrees on the value");
  return g;
}

Gate criterion_correlated(const eepc::RunConfig& cfg) {
  Gate g;
  const auto m = eepc::build_matrix(cfg.network, cfg.model);
  const auto game = eepc::to_finite_game(m);
  g.require(eepc::classify_equilibria(m).regime ==
                eepc::EquilibriumClass::Three,
            "reference pair not in the three-equilibria regime");

  for (int k = 0; k <= 100; ++k) {
    const double lambda = k / 100.0;
    const auto check = eepc::is_correlated_equilibrium(
        game, eepc::lambda_mixture(m, lambda), 1e-12);
    g.track("worst mixture slack", -check.worst_slack);
    g.require(check.ok, "pure-equilibrium mixture rejected as a CE");
  }

  const auto pure = eepc::enumerate_pure_equilibria(game);
  g.require(!pure.empty(), "no pure equilibria enumerated");
  double best_ne_welfare = 0.0;
  for (const auto& eq : pure) {
    std::vector<double> delta(game.num_joint_actions(), 0.0);
    delta[game.joint_index(eq)] = 1.0;
    g.require(eepc::is_correlated_equilibrium(game, delta, 1e-12).ok,
              "point mass on an enumerated equilibrium rejected as a CE");
    const std::size_t s = game.joint_index(eq);
    best_ne_welfare = std::max(best_ne_welfare,
                               game.payoff(s, 0) + game.payoff(s, 1));
  }

  std::vector<double> welfare(game.num_joint_actions());
  for (std::size_t s = 0; s < welfare.size(); ++s)
    welfare[s] = game.payoff(s, 0) + game.payoff(s, 1);
  const auto opt = eepc::optimize_over_ce(game, welfare);
  g.track("welfare optimum", opt.value);
  g.require(opt.value >= best_ne_welfare - 1e-9,
            "welfare optimum below the best equilibrium welfare");

  const auto cross_check = [&](const eepc::FiniteGame& gm,
                               const std::vector<double>& objective) {
    const auto lp = eepc::optimize_over_ce(gm, objective);
    double best = -1e300;
    for (const auto& v : eepc::ce_polytope_vertices(gm)) {
      double val = 0.0;
      for (std::size_t s = 0; s < v.size(); ++s) val += objective[s] * v[s];
      best = std::max(best, val);
    }
    return std::fabs(lp.value - best);
  };
  g.track("lp vs vertex gap", cross_check(game, welfare));
  g.require(cross_check(game, welfare) <= 1e-9,
            "simplex optimum disagrees with vertex enumeration");

  // Unique regime: the polytope collapses onto the single equilibrium.
  NetworkConfig unique_net = cfg.network;
  unique_net.sensing_cost = 0.2;
  const auto mu = eepc::build_matrix(unique_net, cfg.model);
  const auto unique_game = eepc::to_finite_game(mu);
  const auto vertices = eepc::ce_polytope_vertices(unique_game);
  g.require(!vertices.empty(), "empty CE polytope in the unique regime");
  for (const auto& v : vertices)
    for (std::size_t s = 0; s < v.size(); ++s) {
      const double target = s == 0 ? 1.0 : 0.0;  // delta on (NS, NS)
      g.track("max collapse err", std::fabs(v[s] - target));
      g.require(std::fabs(v[s] - target) <= 1e-6,
                "CE region did not collapse onto the unique equilibrium");
    }
  g.track("lp vs vertex gap",
          cross_check(unique_game,
                      std::vector<double>(unique_game.num_joint_actions(),
                                          1.0)));
  return g;
}

Gate criterion_hybrid(const eepc::RunConfig& cfg) {
  Gate g;
  const double alpha = cfg.network.sensing_cost;
  const auto hybrid = eepc::build_hybrid_game(cfg.network, cfg.model,
                                              cfg.grid);
  const int points = hybrid.grid_points(0);
  g.require(points == 101, "grid does not hold 101 levels");

  // Tensor identity: flipping NS -> S at the same power level loses exactly
  // alpha times the non-sensing payoff, for every opponent action.
  for (int i = 0; i < 2; ++i) {
    const int other = 1 - i;
    for (int k = 0; k < points; ++k)
      for (int b = 0; b < 2 * hybrid.grid_points(other); ++b) {
        std::vector<int> ns(2), s(2);
        ns[i] = k;
        s[i] = points + k;
        ns[other] = s[other] = b;
        const double u_ns = hybrid.game.payoff(ns, i);
        const double margin = u_ns - hybrid.game.payoff(s, i);
        g.track("max margin err", std::fabs(margin - alpha * u_ns));
        g.require(std::fabs(margin - alpha * u_ns) <= 1e-12,
                  "sensing margin differs from alpha times the payoff");
      }
  }

  const auto equilibria = eepc::hybrid_equilibria(hybrid);
  g.require(equilibria.size() == 1,
            "exhaustive search finds " + std::to_string(equilibria.size()) +
                " pure equilibria; with best-response slope exactly 1/2 the "
                "reply to any symmetric profile bisects the gap down to the "
                "one-shot power, and third-order curvature favors the upper "
                "grid level, so the first level above it is also "
                "self-supporting on every grid that contains both");

  // The location clause is checked against the equilibrium nearest the
  // closed-form powers so it stays meaningful even when uniqueness fails.
  const auto closed = eepc::nash_powers(cfg.network, cfg.model);
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < equilibria.size(); ++e) {
    double dist = 0.0;
    for (int i = 0; i < 2; ++i)
      dist += std::fabs(hybrid.power_of(i, equilibria[e][i]) - closed[i]);
    if (dist < best_dist) {
      best_dist = dist;
      best = e;
    }
  }
  if (!equilibria.empty()) {
    for (int i = 0; i < 2; ++i) {
      const int action = equilibria[best][i];
      g.require(!hybrid.senses(i, action),
                "hybrid equilibrium contains a sensing action");
      int nearest = 0;
      for (int k = 1; k < points; ++k)
        if (std::fabs(hybrid.grid[i][k] - closed[i]) <
            std::fabs(hybrid.grid[i][nearest] - closed[i]))
          nearest = k;
      g.require(action % points == nearest,
                "hybrid equilibrium power not the grid level nearest the "
                "one-shot power");
      g.track("max power snap err",
              std::fabs(hybrid.power_of(i, action) - closed[i]));
    }
  }

  const auto report = eepc::paradox_report(cfg.network, cfg.model, alpha,
                                           cfg.grid);
  g.require(report.verdict == "paradox",
            "two-stage outcome does not dominate the hybrid equilibrium");
  const double lead_ref = 3.8200639581358680043;
  const double follow_ref = 3.9941196470042309202;
  const double ns_ref = 3.678794411714423216;
  for (int i = 0; i < 2; ++i) {
    g.track("max hybrid utility err",
            std::fabs(report.ne_utility[i] - ns_ref));
    g.require(std::fabs(report.ne_utility[i] - ns_ref) <= 1e-9,
              "hybrid equilibrium utility off the one-shot value");
  }
  for (const auto& outcome : report.two_stage) {
    const double lo = std::min(outcome.utility[0], outcome.utility[1]);
    const double hi = std::max(outcome.utility[0], outcome.utility[1]);
    g.require(std::fabs(lo - lead_ref) <= 1e-9 &&
                  std::fabs(hi - follow_ref) <= 1e-9,
              "two-stage utilities off the hierarchical closed forms");
    g.require(std::fabs(lo - 3.820) <= 1e-3 && std::fabs(hi - 3.994) <= 1e-3,
              "two-stage utilities outside the published bands");
    g.require(lo > report.ne_utility[0] + 1e-6 &&
                  lo > report.ne_utility[1] + 1e-6,
              "two-stage outcome does not Pareto-dominate the hybrid one");
  }
  g.require(report.two_stage.size() == 2, "expected both role assignments");
  return g;
}

// --------------------------------------------------------------------------

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& bin, const std::string& args,
            const std::filesystem::path& out,
            const std::filesystem::path& err) {
  const std::string cmd = "'" + bin + "' " + args + " > '" + out.string() +
                          "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Gate criterion_cli(const Options& opt) {
  Gate g;
  namespace fs = std::filesystem;
  const fs::path scratch(opt.scratch);
  fs::create_directories(scratch);
  const fs::path err = scratch / "stderr.txt";

  const std::vector<std::string> commands = {
      "roots",        "one-shot",          "stackelberg", "sensing-game",
      "two-player",   "correlated-region", "hybrid-paradox",
      "alpha-sweep"};
  for (const auto& sub : commands) {
    const fs::path a = scratch / (sub + ".a");
    const fs::path b = scratch / (sub + ".b");
    const std::string args = "--config '" + opt.config + "' " + sub;
    g.require(run_cli(opt.cli, args, a, err) == 0,
              sub + " did not exit cleanly: " + read_file(err));
    g.require(run_cli(opt.cli, args, b, err) == 0,
              sub + " did not exit cleanly on the second run");
    const std::string first = read_file(a);
    g.require(!first.empty(), sub + " produced no output");
    g.require(first == read_file(b),
              sub + " output changed between consecutive runs");
  }

  // Malformed input: exit 1 and the message names the field.
  std::ifstream cfg_in(opt.config);
  json doc;
  cfg_in >> doc;
  json bad = doc;
  bad["noise_power"] = -0.1;
  const fs::path bad_path = scratch / "bad.json";
  std::ofstream(bad_path) << bad.dump(2);
  const fs::path sink = scratch / "sink.txt";
  g.require(run_cli(opt.cli, "--config '" + bad_path.string() +
                                 "' two-player",
                    sink, err) == 1,
            "malformed config did not exit with status 1");
  g.require(read_file(err).find("noise_power") != std::string::npos,
            "validation message does not name the field");

  // Structurally valid but infeasible model: exit 2 naming the condition.
  json infeasible = doc;
  infeasible["players"] = 3;
  infeasible["gain"] = {1.0, 1.0, 1.0};
  infeasible["rate"] = {1.0, 1.0, 1.0};
  infeasible["max_power"] = {1.0, 1.0, 1.0};
  const fs::path inf_path = scratch / "infeasible.json";
  std::ofstream(inf_path) << infeasible.dump(2);
  g.require(run_cli(opt.cli, "--config '" + inf_path.string() + "' one-shot",
                    sink, err) == 2,
            "infeasible model did not exit with status 2");
  g.require(read_file(err).find("(K-1)*beta >= 1") != std::string::npos,
            "infeasibility message does not name the condition");

  // CSV contract: units in headers, floats in fixed scientific form.
  const std::string sweep = read_file(scratch / "alpha-sweep.a");
  const std::string region = read_file(scratch / "correlated-region.a");
  g.require(sweep.find("_bit_per_joule") != std::string::npos &&
                region.find("_bit_per_joule") != std::string::npos &&
                region.find("theta_rad") != std::string::npos,
            "CSV headers missing units");
  const std::regex sci(R"(-?\d\.\d{11}e[+-]\d{2,3})");
  std::istringstream rows(sweep);
  std::string row;
  std::getline(rows, row);  // header
  while (std::getline(rows, row)) {
    std::istringstream cells(row);
    std::string cell;
    int column = 0;
    while (std::getline(cells, cell, ',')) {
      if (column != 1 && !cell.empty())  // column 1 is the regime label
        g.require(std::regex_match(cell, sci),
                  "CSV float not in 12-digit scientific form: " + cell);
      ++column;
    }
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance gate"};
  Options opt;
  app.add_option("--cli", opt.cli, "path to the CLI binary")->required();
  app.add_option("--config", opt.config, "example run configuration")
      ->required();
  app.add_option("--scratch", opt.scratch, "writable scratch directory")
      ->required();
  CLI11_PARSE(app, argc, argv);

  eepc::RunConfig cfg;
  try {
    cfg = eepc::load_run_config(opt.config);
  } catch (const std::exception& e) {
    std::cerr << "cannot load " << opt.config << ": " << e.what() << "\n";
    return 1;
  }

  struct Item {
    const char* label;
    std::function<Gate()> run;
  };
  const std::vector<Item> items = {
      {"closed-form SINR roots", [] { return criterion_roots(); }},
      {"best-response dynamics vs closed-form powers",
       [] { return criterion_best_response(); }},
      {"weighted potential on random sensing games",
       [] { return criterion_weighted_potential(); }},
      {"potential argmax equals enumerated equilibria",
       [] { return criterion_potential_argmax(); }},
      {"sensing-cost thresholds and regime classification",
       [&] { return criterion_thresholds(cfg); }},
      {"mixed equilibrium by indifference",
       [&] { return criterion_mixed(cfg); }},
      {"correlated-equilibrium polytope",
       [&] { return criterion_correlated(cfg); }},
      {"hybrid dominance and two-stage paradox",
       [&] { return criterion_hybrid(cfg); }},
      {"CLI determinism, exit codes, and output contract",
       [&] { return criterion_cli(opt); }},
  };

  bool all_ok = true;
  for (std::size_t n = 0; n < items.size(); ++n) {
    Gate gate;
    try {
      gate = items[n].run();
    } catch (const std::exception& e) {
      gate.require(false, std::string("exception: ") + e.what());
    }
    all_ok = all_ok && gate.ok();
    std::cout << (gate.ok() ? "[PASS]" : "[FAIL]") << " criterion " << n + 1
              << ": " << items[n].label << " (" << gate.summary() << ")\n";
  }
  return all_ok ? 0 : 1;
}
