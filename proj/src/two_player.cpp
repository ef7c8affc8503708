#include "eepc/two_player.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eepc/errors.hpp"

namespace eepc {

SensingMatrix2x2 build_matrix(const NetworkConfig& cfg,
                              const EfficiencyModel& model, double tol) {
  cfg.validate();
  if (cfg.players != 2)
    throw std::invalid_argument("players: the matrix game needs exactly 2");

  SensingMatrix2x2 m;
  m.alpha = cfg.sensing_cost;
  m.beta = solve_beta(model, tol).value;
  m.gamma = solve_gamma(model, 2, tol).value;
  m.f_beta = model.value(m.beta);
  m.f_gamma = model.value(m.gamma);
  m.weight = {cfg.weight(0), cfg.weight(1)};

  if (!(1.0 - m.beta > 0.0)) {
    std::ostringstream os;
    os << "no interior one-shot equilibrium: beta = " << m.beta << " >= 1";
    throw InfeasibleError("(K-1)*beta >= 1", os.str());
  }
  const double cross = 1.0 - m.gamma * m.beta;
  const double one_shot = m.f_beta * (1.0 - m.beta) / m.beta;
  const double lead = m.f_gamma * cross / (m.gamma * (1.0 + m.beta));
  const double follow =
      (1.0 - m.alpha) * m.f_beta * cross / (m.beta * (1.0 + m.gamma));

  for (int i = 0; i < 2; ++i) {
    m.u[i][0][0] = m.weight[i] * one_shot;
    m.u[i][1][1] = (1.0 - m.alpha) * m.weight[i] * one_shot;
  }
  // (NS, S): player 0 leads, player 1 senses and follows.
  m.u[0][0][1] = m.weight[0] * lead;
  m.u[1][0][1] = m.weight[1] * follow;
  // (S, NS): mirrored.
  m.u[0][1][0] = m.weight[0] * follow;
  m.u[1][1][0] = m.weight[1] * lead;
  return m;
}

double alpha_threshold_three_equilibria(const SensingMatrix2x2& m) {
  return (m.beta - m.gamma) / (1.0 - m.beta * m.gamma);
}

double alpha_threshold_follower_gain(const SensingMatrix2x2& m) {
  const double num = m.f_beta - m.f_gamma + m.f_beta / m.beta -
                     m.f_gamma / m.gamma;
  const double den = m.f_beta * (1.0 + m.beta) / m.beta;
  return num / den;
}

MixedProfile mixed_equilibrium(const SensingMatrix2x2& m) {
  // Player i mixes to keep the opponent indifferent between its two rows.
  const auto ns_weight = [](double u_ns_ns, double u_s_ns, double u_ns_s,
                            double u_s_s) {
    const double den = (u_ns_ns - u_s_ns) + (u_s_s - u_ns_s);
    if (den == 0.0)
      throw std::domain_error(
          "no-interior-solution: indifference system is degenerate");
    return (u_s_s - u_ns_s) / den;
  };
  MixedProfile out;
  // Probability player 1 puts on NS keeps player 0 indifferent.
  out.p_ns[1] = ns_weight(m.u[0][0][0], m.u[0][1][0], m.u[0][0][1],
                          m.u[0][1][1]);
  // And vice versa.
  out.p_ns[0] = ns_weight(m.u[1][0][0], m.u[1][0][1], m.u[1][1][0],
                          m.u[1][1][1]);
  for (double q : out.p_ns)
    if (!(q >= 0.0 && q <= 1.0))
      throw std::domain_error(
          "no-interior-solution: indifference probability outside [0, 1]");
  for (int i = 0; i < 2; ++i) {
    double acc = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const double pa = a == 0 ? out.p_ns[0] : 1.0 - out.p_ns[0];
        const double pb = b == 0 ? out.p_ns[1] : 1.0 - out.p_ns[1];
        acc += pa * pb * m.u[i][a][b];
      }
    out.value[i] = acc;
  }
  return out;
}

EquilibriumReport classify_equilibria(const SensingMatrix2x2& m, double tol) {
  EquilibriumReport report;
  report.alpha = m.alpha;
  report.threshold_three = alpha_threshold_three_equilibria(m);
  report.threshold_follower = alpha_threshold_follower_gain(m);

  const double band = 1e-9;
  if (std::fabs(m.alpha - report.threshold_three) <= band)
    report.regime = EquilibriumClass::Continuum;
  else if (m.alpha < report.threshold_three)
    report.regime = EquilibriumClass::Three;
  else
    report.regime = EquilibriumClass::Unique;

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const bool stable_0 = m.u[0][1 - a][b] <= m.u[0][a][b] + tol;
      const bool stable_1 = m.u[1][a][1 - b] <= m.u[1][a][b] + tol;
      if (stable_0 && stable_1) report.pure.push_back({a, b});
    }

  try {
    report.mixed = mixed_equilibrium(m);
    report.has_mixed = true;
  } catch (const std::domain_error&) {
    report.has_mixed = false;
  }

  // Predicted pure sets per regime, checked against the deviation test.
  std::vector<std::array<int, 2>> predicted;
  switch (report.regime) {
    case EquilibriumClass::Three:
      predicted = {{0, 1}, {1, 0}};
      break;
    case EquilibriumClass::Unique:
      predicted = {{0, 0}};
      break;
    case EquilibriumClass::Continuum:
      predicted = {{0, 0}, {0, 1}, {1, 0}};
      break;
  }
  const auto contains = [](const std::vector<std::array<int, 2>>& set,
                           const std::array<int, 2>& cell) {
    for (const auto& c : set)
      if (c == cell) return true;
    return false;
  };
  for (const auto& cell : predicted)
    if (!contains(report.pure, cell)) {
      std::ostringstream os;
      os << "predicted pure equilibrium (" << cell[0] << "," << cell[1]
         << ") fails the deviation check";
      report.findings.push_back(os.str());
    }
  for (const auto& cell : report.pure)
    if (!contains(predicted, cell)) {
      std::ostringstream os;
      os << "unpredicted pure equilibrium (" << cell[0] << "," << cell[1]
         << ") passes the deviation check";
      report.findings.push_back(os.str());
    }
  if (report.regime == EquilibriumClass::Three && !report.has_mixed)
    report.findings.push_back(
        "three-equilibria regime but no interior mixed profile");
  return report;
}

FiniteGame to_finite_game(const SensingMatrix2x2& m) {
  std::vector<std::vector<std::string>> labels(
      2, std::vector<std::string>{"NS", "S"});
  FiniteGame game(std::move(labels), "sensing-2x2");
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const std::size_t joint = game.joint_index({a, b});
      game.set_payoff(joint, 0, m.u[0][a][b]);
      game.set_payoff(joint, 1, m.u[1][a][b]);
    }
  return game;
}

const char* to_string(EquilibriumClass c) {
  switch (c) {
    case EquilibriumClass::Three:
      return "three";
    case EquilibriumClass::Unique:
      return "unique";
    case EquilibriumClass::Continuum:
      return "continuum";
  }
  return "?";
}

nlohmann::json SensingMatrix2x2::to_json() const {
  nlohmann::json doc;
  doc["beta"] = beta;
  doc["gamma"] = gamma;
  doc["f_beta"] = f_beta;
  doc["f_gamma"] = f_gamma;
  doc["alpha"] = alpha;
  doc["weight_bit_per_joule"] = weight;
  const char* names[2] = {"NS", "S"};
  nlohmann::json cells = nlohmann::json::array();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      nlohmann::json cell;
      cell["profile"] = {names[a], names[b]};
      cell["utility_bit_per_joule"] = {u[0][a][b], u[1][a][b]};
      cells.push_back(cell);
    }
  doc["cells"] = cells;
  return doc;
}

nlohmann::json EquilibriumReport::to_json() const {
  nlohmann::json doc;
  doc["regime"] = to_string(regime);
  doc["alpha"] = alpha;
  doc["threshold_three"] = threshold_three;
  doc["threshold_follower"] = threshold_follower;
  const char* names[2] = {"NS", "S"};
  nlohmann::json pure_json = nlohmann::json::array();
  for (const auto& cell : pure)
    pure_json.push_back({names[cell[0]], names[cell[1]]});
  doc["pure"] = pure_json;
  doc["has_mixed"] = has_mixed;
  if (has_mixed) {
    doc["mixed"] = {
        {"p_ns", mixed.p_ns},
        {"p_s", {1.0 - mixed.p_ns[0], 1.0 - mixed.p_ns[1]}},
        {"value_bit_per_joule", mixed.value},
    };
  }
  doc["findings"] = findings;
  return doc;
}

}  // namespace eepc
