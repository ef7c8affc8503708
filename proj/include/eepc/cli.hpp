#pragma once

#include <optional>
#include <string>

#include "eepc/run_config.hpp"

namespace eepc::cli {

// Each command renders its result to a deterministic string: JSON documents
// (2-space indent, trailing newline) for single reports, CSV with
// units-in-header columns for tabular output. Floating-point CSV fields are
// printed with 12 significant digits.

std::string run_roots(const RunConfig& cfg);
std::string run_one_shot(const RunConfig& cfg);
std::string run_stackelberg(const RunConfig& cfg);
std::string run_sensing_game(const RunConfig& cfg);
std::string run_two_player(const RunConfig& cfg);
std::string run_correlated_region(const RunConfig& cfg);      // CSV
std::string run_hybrid_paradox(const RunConfig& cfg);
std::string run_alpha_sweep(const RunConfig& cfg);            // CSV

// Fixed-width scientific rendering with 12 significant digits.
std::string format_sci(double v);

}  // namespace eepc::cli
