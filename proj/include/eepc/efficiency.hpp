#pragma once

#include <string>

namespace eepc {

enum class EfficiencyFamily { ExpRatio, Goodman };

// Sigmoidal packet-success efficiency f : [0, inf) -> [0, 1).
//
//   ExpRatio: f(x) = exp(-a/x),        a > 0
//   Goodman:  f(x) = (1 - exp(-x))^m,  integer m >= 2
//
// Both families vanish faster than linearly at the origin, so f(x)/x -> 0
// and the energy efficiency f(sinr)/p extends continuously to p = 0.
class EfficiencyModel {
 public:
  static EfficiencyModel exp_ratio(double a);
  static EfficiencyModel goodman(int m);

  double value(double x) const;  // f(x), requires x >= 0
  double deriv(double x) const;  // f'(x), requires x >= 0

  EfficiencyFamily family() const { return family_; }
  double a() const { return a_; }
  int m() const { return m_; }
  std::string describe() const;

 private:
  EfficiencyModel(EfficiencyFamily family, double a, int m)
      : family_(family), a_(a), m_(m) {}

  EfficiencyFamily family_;
  double a_;
  int m_;
};

struct RootResult {
  double value = 0.0;
  double residual = 0.0;   // defining equation evaluated at `value`
  int iterations = 0;      // bisection steps taken
  int sign_changes = 1;    // sign flips seen on the scan grid; >1 flags a
                           // possibly non-unique root (reported, not fatal)
};

// Root of  x * (1 - eps*x) * f'(x) = f(x)  on (0, 1/eps); eps = 0 recovers
// the undamped equation x f'(x) = f(x). Brackets by scanning a log-spaced
// grid on [1e-6, min(1e3, 1/eps)], then bisects to machine precision.
// Throws InfeasibleError("bracket-not-found") when no sign change exists on
// the scan range (non-sigmoidal parameterization).
RootResult solve_sinr_root(const EfficiencyModel& model, double eps,
                           double tol = 1e-12);

// Selfish target: x f'(x) = f(x).
RootResult solve_beta(const EfficiencyModel& model, double tol = 1e-12);

// Follower target under one leader among `players` transmitters:
// eps = (players-1)*beta / (1 - (players-2)*beta). Requires players >= 2.
RootResult solve_gamma(const EfficiencyModel& model, int players,
                       double tol = 1e-12);

// Damping coefficient for the spread-spectrum stage in which `non_sensing`
// of `players` transmitters skipped sensing:
//   eps = (players+2-non_sensing)*beta
//         / (gain^2 - gain*(players+1-non_sensing)*beta)
// where gain is the processing gain. Throws InfeasibleError when the
// denominator is not positive.
double epsilon_L(int players, double processing_gain, int non_sensing,
                 double beta);

struct GammaLResult {
  RootResult root;
  double epsilon = 0.0;
};

GammaLResult solve_gamma_L(const EfficiencyModel& model, int players,
                           double processing_gain, int non_sensing,
                           double tol = 1e-12);

}  // namespace eepc
