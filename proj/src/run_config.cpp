#include "eepc/run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eepc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw std::invalid_argument(field + ": " + why);
}

const json& require(const json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) fail(field, "missing required field");
  return *it;
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) fail(field, "expected a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field, "expected an integer");
  return v.get<int>();
}

std::vector<double> number_list(const json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) fail(field, "expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

void reject_unknown(const json& doc, const std::set<std::string>& known,
                    const std::string& scope) {
  for (const auto& item : doc.items())
    if (!known.contains(item.key()))
      fail(scope.empty() ? item.key() : scope + "." + item.key(),
           "unknown field");
}

}  // namespace

RunConfig parse_run_config(const json& doc) {
  if (!doc.is_object()) fail("config", "expected a JSON object");
  reject_unknown(doc,
                 {"players", "gain", "rate", "noise_power", "max_power",
                  "sensing_cost", "processing_gain", "efficiency",
                  "tolerances", "gamma_indexing", "grid", "sweep",
                  "region_angles"},
                 "");

  RunConfig cfg;
  cfg.network.players = integer(require(doc, "players"), "players");
  cfg.network.gain = number_list(require(doc, "gain"), "gain");
  cfg.network.rate = number_list(require(doc, "rate"), "rate");
  cfg.network.noise_power =
      number(require(doc, "noise_power"), "noise_power");
  cfg.network.max_power = number_list(require(doc, "max_power"), "max_power");
  if (doc.contains("sensing_cost"))
    cfg.network.sensing_cost = number(doc["sensing_cost"], "sensing_cost");
  if (doc.contains("processing_gain"))
    cfg.network.processing_gain =
        number(doc["processing_gain"], "processing_gain");

  const json& eff = require(doc, "efficiency");
  if (!eff.is_object()) fail("efficiency", "expected an object");
  reject_unknown(eff, {"family", "a", "m"}, "efficiency");
  const json& family = require(eff, "family");
  if (!family.is_string()) fail("efficiency.family", "expected a string");
  const std::string fam = family.get<std::string>();
  if (fam == "exp_ratio") {
    cfg.model =
        EfficiencyModel::exp_ratio(number(require(eff, "a"), "efficiency.a"));
  } else if (fam == "goodman") {
    cfg.model =
        EfficiencyModel::goodman(integer(require(eff, "m"), "efficiency.m"));
  } else {
    fail("efficiency.family", "expected \"exp_ratio\" or \"goodman\"");
  }

  if (doc.contains("tolerances")) {
    const json& tols = doc["tolerances"];
    if (!tols.is_object()) fail("tolerances", "expected an object");
    reject_unknown(tols, {"root", "equilibrium"}, "tolerances");
    if (tols.contains("root"))
      cfg.root_tol = number(tols["root"], "tolerances.root");
    if (tols.contains("equilibrium"))
      cfg.eq_tol = number(tols["equilibrium"], "tolerances.equilibrium");
    if (!(cfg.root_tol > 0.0)) fail("tolerances.root", "must be > 0");
    if (!(cfg.eq_tol > 0.0)) fail("tolerances.equilibrium", "must be > 0");
  }

  if (doc.contains("gamma_indexing")) {
    const json& gi = doc["gamma_indexing"];
    if (!gi.is_string()) fail("gamma_indexing", "expected a string");
    const std::string s = gi.get<std::string>();
    if (s == "verbatim")
      cfg.gamma_indexing = GammaIndexing::Verbatim;
    else if (s == "consistent")
      cfg.gamma_indexing = GammaIndexing::Consistent;
    else
      fail("gamma_indexing", "expected \"verbatim\" or \"consistent\"");
  }

  if (doc.contains("grid")) {
    const json& grid = doc["grid"];
    if (!grid.is_object()) fail("grid", "expected an object");
    reject_unknown(grid, {"points", "min_power", "max_power", "include_nash"},
                   "grid");
    if (grid.contains("points"))
      cfg.grid.points = integer(grid["points"], "grid.points");
    if (grid.contains("min_power"))
      cfg.grid.min_power = number(grid["min_power"], "grid.min_power");
    if (grid.contains("max_power"))
      cfg.grid.max_power = number(grid["max_power"], "grid.max_power");
    if (grid.contains("include_nash")) {
      if (!grid["include_nash"].is_boolean())
        fail("grid.include_nash", "expected a boolean");
      cfg.grid.include_nash = grid["include_nash"].get<bool>();
    }
    if (cfg.grid.points < 2) fail("grid.points", "must be >= 2");
  }

  if (doc.contains("sweep")) {
    const json& sweep = doc["sweep"];
    if (!sweep.is_object()) fail("sweep", "expected an object");
    reject_unknown(sweep, {"from", "to", "steps"}, "sweep");
    if (sweep.contains("from"))
      cfg.sweep.from = number(sweep["from"], "sweep.from");
    if (sweep.contains("to")) cfg.sweep.to = number(sweep["to"], "sweep.to");
    if (sweep.contains("steps"))
      cfg.sweep.steps = integer(sweep["steps"], "sweep.steps");
    if (!(cfg.sweep.from >= 0.0 && cfg.sweep.from < 1.0))
      fail("sweep.from", "must lie in [0, 1)");
    if (!(cfg.sweep.to >= cfg.sweep.from && cfg.sweep.to < 1.0))
      fail("sweep.to", "must lie in [sweep.from, 1)");
    if (cfg.sweep.steps < 1) fail("sweep.steps", "must be >= 1");
  }

  if (doc.contains("region_angles")) {
    cfg.region_angles = integer(doc["region_angles"], "region_angles");
    if (cfg.region_angles < 4) fail("region_angles", "must be >= 4");
  }

  cfg.network.validate();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("config", "cannot open file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail("config", std::string("invalid JSON: ") + e.what());
  }
  return parse_run_config(doc);
}

}  // namespace eepc
