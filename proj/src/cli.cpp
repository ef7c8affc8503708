#include "eepc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "eepc/correlated.hpp"
#include "eepc/errors.hpp"
#include "eepc/kernels.hpp"
#include "eepc/oneshot.hpp"
#include "eepc/sensing_game.hpp"
#include "eepc/two_player.hpp"

namespace eepc::cli {

namespace {

using nlohmann::json;

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json root_to_json(const RootResult& r) {
  return {{"value", r.value},
          {"residual", r.residual},
          {"iterations", r.iterations},
          {"sign_changes", r.sign_changes}};
}

}  // namespace

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string run_roots(const RunConfig& cfg) {
  json doc;
  doc["efficiency"] = cfg.model.describe();
  doc["players"] = cfg.network.players;
  doc["processing_gain"] = cfg.network.processing_gain;
  const RootResult beta = solve_beta(cfg.model, cfg.root_tol);
  doc["beta"] = root_to_json(beta);
  if (cfg.network.players >= 2)
    doc["gamma"] = root_to_json(solve_gamma(cfg.model, cfg.network.players,
                                            cfg.root_tol));
  json ladder = json::array();
  for (int l = 0; l <= cfg.network.players + 1; ++l) {
    json entry;
    entry["non_sensing"] = l;
    try {
      const GammaLResult g = solve_gamma_L(cfg.model, cfg.network.players,
                                           cfg.network.processing_gain, l,
                                           cfg.root_tol);
      entry["feasible"] = true;
      entry["epsilon"] = g.epsilon;
      entry["gamma"] = root_to_json(g.root);
    } catch (const InfeasibleError& e) {
      entry["feasible"] = false;
      entry["condition"] = e.condition();
    }
    ladder.push_back(entry);
  }
  doc["gamma_ladder"] = ladder;
  return dump(doc);
}

std::string run_one_shot(const RunConfig& cfg) {
  const auto powers = nash_powers(cfg.network, cfg.model, cfg.root_tol);
  const auto utilities = nash_utilities(cfg.network, cfg.model, cfg.root_tol);
  json doc;
  doc["beta"] = solve_beta(cfg.model, cfg.root_tol).value;
  doc["power_watts"] = powers;
  doc["utility_bit_per_joule"] = utilities;
  json sinrs = json::array();
  for (int i = 0; i < cfg.network.players; ++i)
    sinrs.push_back(sinr(cfg.network, powers, i));
  doc["sinr"] = sinrs;

  const BrResult br = br_dynamics(cfg.network, cfg.model,
                                  std::vector<double>(cfg.network.players, 0.0),
                                  1e-12);
  double gap = 0.0;
  for (int i = 0; i < cfg.network.players; ++i)
    gap = std::max(gap, std::fabs(br.powers[i] - powers[i]));
  doc["best_response"] = {{"converged", br.converged},
                          {"sweeps", br.sweeps},
                          {"saturated", br.saturated},
                          {"max_gap_watts", gap}};
  return dump(doc);
}

std::string run_stackelberg(const RunConfig& cfg) {
  json doc;
  doc["beta"] = solve_beta(cfg.model, cfg.root_tol).value;
  doc["gamma"] =
      solve_gamma(cfg.model, cfg.network.players, cfg.root_tol).value;
  doc["alpha"] = cfg.network.sensing_cost;
  json players = json::array();
  for (int i = 0; i < cfg.network.players; ++i) {
    const RoleOutcome lead =
        stackelberg_outcome(cfg.network, cfg.model, i, Role::Leader,
                            cfg.root_tol);
    const RoleOutcome follow =
        stackelberg_outcome(cfg.network, cfg.model, i, Role::Follower,
                            cfg.root_tol);
    players.push_back(
        {{"player", i},
         {"leader",
          {{"power_watts", lead.power},
           {"sinr_target", lead.sinr_target},
           {"utility_bit_per_joule", lead.utility}}},
         {"follower",
          {{"power_watts", follow.power},
           {"sinr_target", follow.sinr_target},
           {"utility_bit_per_joule", follow.utility}}}});
  }
  doc["players"] = players;
  return dump(doc);
}

std::string run_sensing_game(const RunConfig& cfg) {
  const FiniteGame game = build_sensing_game(cfg.network, cfg.model,
                                             cfg.gamma_indexing, cfg.root_tol);
  json doc;
  doc["indexing"] = cfg.gamma_indexing == GammaIndexing::Verbatim
                        ? "verbatim"
                        : "consistent";
  if (game.num_joint_actions() <= 1024)
    doc["game"] = game.to_json();
  else
    doc["game"] = "omitted (joint-action space above 1024 cells)";

  json pure = json::array();
  for (const auto& eq : enumerate_pure_equilibria(game, cfg.eq_tol)) {
    int sensing = 0;
    for (int a : eq) sensing += a;
    pure.push_back({{"profile", eq}, {"sensing", sensing}});
  }
  doc["pure_equilibria"] = pure;

  std::vector<double> weights(cfg.network.players);
  for (int i = 0; i < cfg.network.players; ++i)
    weights[i] = cfg.network.weight(i);
  const PotentialCheck check = check_weighted_potential(game, weights);
  doc["weighted_potential"] = {{"is_potential", check.is_potential},
                               {"max_cycle", check.max_cycle}};

  const PotentialTable table = rosenthal_potential(cfg.network, cfg.model,
                                                   cfg.gamma_indexing,
                                                   cfg.root_tol);
  doc["potential"] = {{"phi", table.phi},
                      {"equal_weights", table.equal_weights},
                      {"argmax_sensing", pure_equilibria_by_potential(table)}};
  return dump(doc);
}

std::string run_two_player(const RunConfig& cfg) {
  const SensingMatrix2x2 m =
      build_matrix(cfg.network, cfg.model, cfg.root_tol);
  json doc;
  doc["matrix"] = m.to_json();
  doc["report"] = classify_equilibria(m, cfg.eq_tol).to_json();
  return dump(doc);
}

std::string run_correlated_region(const RunConfig& cfg) {
  const SensingMatrix2x2 m =
      build_matrix(cfg.network, cfg.model, cfg.root_tol);
  const auto region = ce_utility_region(m, cfg.region_angles);
  std::ostringstream os;
  os << "theta_rad,u0_bit_per_joule,u1_bit_per_joule,"
        "q_ns_ns,q_s_ns,q_ns_s,q_s_s\n";
  for (const auto& pt : region) {
    os << format_sci(pt.theta) << ',' << format_sci(pt.u0) << ','
       << format_sci(pt.u1);
    for (double q : pt.q) os << ',' << format_sci(q);
    os << '\n';
  }
  return os.str();
}

std::string run_hybrid_paradox(const RunConfig& cfg) {
  const ParadoxReport report =
      paradox_report(cfg.network, cfg.model, cfg.network.sensing_cost,
                     cfg.grid);
  json doc = report.to_json();
  doc["simd_level"] = kernels::level_name(kernels::active_level());
  return dump(doc);
}

std::string run_alpha_sweep(const RunConfig& cfg) {
  std::ostringstream os;
  os << "alpha,regime,threshold_three,threshold_follower,"
        "u0_ns_ns_bit_per_joule,u0_lead_bit_per_joule,"
        "u0_follow_bit_per_joule,u1_ns_ns_bit_per_joule,"
        "u1_lead_bit_per_joule,u1_follow_bit_per_joule,"
        "mixed_p_ns_0,mixed_p_ns_1,"
        "mixed_u0_bit_per_joule,mixed_u1_bit_per_joule\n";
  NetworkConfig net = cfg.network;
  const int steps = cfg.sweep.steps;
  for (int k = 0; k < steps; ++k) {
    const double alpha =
        steps == 1 ? cfg.sweep.from
                   : cfg.sweep.from +
                         (cfg.sweep.to - cfg.sweep.from) * k / (steps - 1);
    net.sensing_cost = alpha;
    const SensingMatrix2x2 m = build_matrix(net, cfg.model, cfg.root_tol);
    const EquilibriumReport report = classify_equilibria(m, cfg.eq_tol);
    os << format_sci(alpha) << ',' << to_string(report.regime) << ','
       << format_sci(report.threshold_three) << ','
       << format_sci(report.threshold_follower) << ','
       << format_sci(m.u[0][0][0]) << ',' << format_sci(m.u[0][0][1]) << ','
       << format_sci(m.u[0][1][0]) << ',' << format_sci(m.u[1][0][0]) << ','
       << format_sci(m.u[1][1][0]) << ',' << format_sci(m.u[1][0][1]) << ',';
    if (report.has_mixed) {
      os << format_sci(report.mixed.p_ns[0]) << ','
         << format_sci(report.mixed.p_ns[1]) << ','
         << format_sci(report.mixed.value[0]) << ','
         << format_sci(report.mixed.value[1]);
    } else {
      os << ",,,";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace eepc::cli
