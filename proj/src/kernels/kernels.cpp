#include "eepc/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace eepc::kernels {

namespace {

double ipow(double base, int n) {
  double r = 1.0;
  double b = base;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

bool cpu_has_avx2() {
#if defined(EEPC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Level detect_level() {
  if (const char* env = std::getenv("EEPC_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Level::Scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Level::Avx2;
    return Level::Scalar;
  }
  return cpu_has_avx2() ? Level::Avx2 : Level::Scalar;
}

std::atomic<Level>& level_slot() {
  static std::atomic<Level> slot{detect_level()};
  return slot;
}

}  // namespace

const char* level_name(Level level) {
  switch (level) {
    case Level::Scalar:
      return "scalar";
    case Level::Avx2:
      return "avx2";
  }
  return "?";
}

bool level_available(Level level) {
  return level == Level::Scalar || cpu_has_avx2();
}

Level active_level() { return level_slot().load(std::memory_order_relaxed); }

void set_level(Level level) {
  if (!level_available(level))
    throw std::invalid_argument("level: not available in this build/CPU");
  level_slot().store(level, std::memory_order_relaxed);
}

namespace detail {

void eval_f_batch_scalar(const EfficiencyModel& model,
                         std::span<const double> x, std::span<double> out) {
  if (model.family() == EfficiencyFamily::ExpRatio) {
    const double a = model.a();
    for (std::size_t k = 0; k < x.size(); ++k)
      out[k] = x[k] == 0.0 ? 0.0 : std::exp(-a / x[k]);
  } else {
    const int m = model.m();
    for (std::size_t k = 0; k < x.size(); ++k)
      out[k] = ipow(-std::expm1(-x[k]), m);
  }
}

void utility_grid_scalar(const EfficiencyModel& model, double rate,
                         double gain_own, double gain_other, double noise,
                         std::span<const double> own,
                         std::span<const double> other,
                         std::span<double> out) {
  const std::size_t n = own.size();
  for (std::size_t j = 0; j < other.size(); ++j) {
    const double denom = other[j] * gain_other + noise;
    double* row = out.data() + j * n;
    if (model.family() == EfficiencyFamily::ExpRatio) {
      const double a = model.a();
      for (std::size_t i = 0; i < n; ++i) {
        const double sinr = own[i] * gain_own / denom;
        row[i] = rate * std::exp(-a / sinr) / own[i];
      }
    } else {
      const int m = model.m();
      for (std::size_t i = 0; i < n; ++i) {
        const double sinr = own[i] * gain_own / denom;
        row[i] = rate * ipow(-std::expm1(-sinr), m) / own[i];
      }
    }
  }
}

}  // namespace detail

void eval_f_batch(const EfficiencyModel& model, std::span<const double> x,
                  std::span<double> out) {
  if (x.size() != out.size())
    throw std::invalid_argument("out: size must match x");
#if defined(EEPC_HAVE_AVX2)
  if (active_level() == Level::Avx2) {
    detail::eval_f_batch_avx2(model, x, out);
    return;
  }
#endif
  detail::eval_f_batch_scalar(model, x, out);
}

void utility_grid(const EfficiencyModel& model, double rate, double gain_own,
                  double gain_other, double noise, std::span<const double> own,
                  std::span<const double> other, std::span<double> out) {
  if (out.size() != own.size() * other.size())
    throw std::invalid_argument("out: size must be own.size()*other.size()");
  for (double p : own)
    if (!(p > 0.0)) throw std::invalid_argument("own: powers must be > 0");
#if defined(EEPC_HAVE_AVX2)
  if (active_level() == Level::Avx2) {
    detail::utility_grid_avx2(model, rate, gain_own, gain_other, noise, own,
                              other, out);
    return;
  }
#endif
  detail::utility_grid_scalar(model, rate, gain_own, gain_other, noise, own,
                              other, out);
}

}  // namespace eepc::kernels
