#pragma once

#include <span>
#include <string>

#include "eepc/efficiency.hpp"

namespace eepc::kernels {

enum class Level { Scalar, Avx2 };

const char* level_name(Level level);

// True when this build and this CPU can run `level`.
bool level_available(Level level);

// Active dispatch level. Defaults to the best available; the EEPC_SIMD
// environment variable ("scalar" or "avx2") overrides at startup.
Level active_level();

// Throws std::invalid_argument when `level` is not available.
void set_level(Level level);

// out[k] = f(x[k]). Inputs must be >= 0; x and out must have equal size.
void eval_f_batch(const EfficiencyModel& model, std::span<const double> x,
                  std::span<double> out);

// Energy-efficiency surface of one transmitter against an opponent power
// grid: for own power own[i] and opponent power other[j],
//   out[j * own.size() + i] =
//       rate * f(own[i]*gain_own / (other[j]*gain_other + noise)) / own[i].
// Own powers must be > 0.
void utility_grid(const EfficiencyModel& model, double rate, double gain_own,
                  double gain_other, double noise,
                  std::span<const double> own, std::span<const double> other,
                  std::span<double> out);

namespace detail {

void eval_f_batch_scalar(const EfficiencyModel& model,
                         std::span<const double> x, std::span<double> out);
void utility_grid_scalar(const EfficiencyModel& model, double rate,
                         double gain_own, double gain_other, double noise,
                         std::span<const double> own,
                         std::span<const double> other,
                         std::span<double> out);

#if defined(EEPC_HAVE_AVX2)
void eval_f_batch_avx2(const EfficiencyModel& model, std::span<const double> x,
                       std::span<double> out);
void utility_grid_avx2(const EfficiencyModel& model, double rate,
                       double gain_own, double gain_other, double noise,
                       std::span<const double> own,
                       std::span<const double> other, std::span<double> out);
#endif

}  // namespace detail

}  // namespace eepc::kernels
