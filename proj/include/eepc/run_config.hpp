#pragma once

#include <string>

#include <json.hpp>

#include "eepc/efficiency.hpp"
#include "eepc/hierarchy.hpp"
#include "eepc/hybrid.hpp"
#include "eepc/network.hpp"

namespace eepc {

struct SweepSpec {
  double from = 0.0;
  double to = 0.3;
  int steps = 61;
};

// Everything a CLI run needs, loaded from one JSON document. See
// docs/config_schema.json for the field reference.
struct RunConfig {
  NetworkConfig network;
  EfficiencyModel model = EfficiencyModel::exp_ratio(1.0);
  double root_tol = 1e-12;
  double eq_tol = 1e-12;
  GammaIndexing gamma_indexing = GammaIndexing::Verbatim;
  GridSpec grid;
  SweepSpec sweep;
  int region_angles = 360;
};

// Throws std::invalid_argument naming the missing or malformed field.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::string& path);

}  // namespace eepc
