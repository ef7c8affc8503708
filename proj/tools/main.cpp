#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eepc/cli.hpp"
#include "eepc/errors.hpp"

namespace {

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return 1;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Equilibrium calculators for energy-efficient power control with "
      "spectrum sensing"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  app.add_option("-c,--config", config_path, "JSON run configuration")
      ->required();
  app.add_option("-o,--out", out_path, "write output here instead of stdout");

  std::optional<double> alpha_override;
  std::optional<int> angles_override;
  std::optional<int> grid_points_override;
  std::optional<std::string> indexing_override;

  CLI::App* roots = app.add_subcommand(
      "roots", "SINR targets: beta, gamma, and the gamma_L ladder");
  CLI::App* one_shot = app.add_subcommand(
      "one-shot", "one-shot equilibrium powers, SINRs, and utilities");
  CLI::App* stackelberg = app.add_subcommand(
      "stackelberg", "hierarchical outcome per player and role");
  CLI::App* sensing_game = app.add_subcommand(
      "sensing-game", "K-player sensing game, equilibria, and potential");
  sensing_game->add_option("--indexing", indexing_override,
                           "gamma_L indexing: verbatim|consistent");
  CLI::App* two_player = app.add_subcommand(
      "two-player", "2x2 sensing matrix, thresholds, and equilibrium report");
  two_player->add_option("--alpha", alpha_override,
                         "override the configured sensing cost");
  CLI::App* correlated = app.add_subcommand(
      "correlated-region", "CSV trace of the correlated-equilibrium "
                           "utility region");
  correlated->add_option("--alpha", alpha_override,
                         "override the configured sensing cost");
  correlated->add_option("--angles", angles_override,
                         "number of objective directions");
  CLI::App* hybrid = app.add_subcommand(
      "hybrid-paradox", "joint sensing+power game vs the two-stage outcome");
  hybrid->add_option("--alpha", alpha_override,
                     "override the configured sensing cost");
  hybrid->add_option("--grid-points", grid_points_override,
                     "power levels per player");
  CLI::App* sweep = app.add_subcommand(
      "alpha-sweep", "CSV of the equilibrium landscape vs sensing cost");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    eepc::RunConfig cfg = eepc::load_run_config(config_path);
    if (alpha_override) {
      if (!(*alpha_override >= 0.0 && *alpha_override < 1.0)) {
        std::cerr << "error: alpha: must lie in [0, 1)\n";
        return 1;
      }
      cfg.network.sensing_cost = *alpha_override;
    }
    if (angles_override) cfg.region_angles = *angles_override;
    if (grid_points_override) cfg.grid.points = *grid_points_override;
    if (indexing_override) {
      if (*indexing_override == "verbatim")
        cfg.gamma_indexing = eepc::GammaIndexing::Verbatim;
      else if (*indexing_override == "consistent")
        cfg.gamma_indexing = eepc::GammaIndexing::Consistent;
      else {
        std::cerr << "error: indexing: expected verbatim or consistent\n";
        return 1;
      }
    }

    std::string text;
    if (roots->parsed())
      text = eepc::cli::run_roots(cfg);
    else if (one_shot->parsed())
      text = eepc::cli::run_one_shot(cfg);
    else if (stackelberg->parsed())
      text = eepc::cli::run_stackelberg(cfg);
    else if (sensing_game->parsed())
      text = eepc::cli::run_sensing_game(cfg);
    else if (two_player->parsed())
      text = eepc::cli::run_two_player(cfg);
    else if (correlated->parsed())
      text = eepc::cli::run_correlated_region(cfg);
    else if (hybrid->parsed())
      text = eepc::cli::run_hybrid_paradox(cfg);
    else if (sweep->parsed())
      text = eepc::cli::run_alpha_sweep(cfg);
    return emit(text, out_path);
  } catch (const eepc::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.condition() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
