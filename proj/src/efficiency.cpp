#include "eepc/efficiency.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eepc/errors.hpp"

namespace eepc {

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

void require_nonneg(double x) {
  if (!(x >= 0.0))
    throw std::invalid_argument("sinr: must be >= 0 and finite");
}

}  // namespace

EfficiencyModel EfficiencyModel::exp_ratio(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::invalid_argument("efficiency.a: must be finite and > 0");
  return EfficiencyModel(EfficiencyFamily::ExpRatio, a, 0);
}

EfficiencyModel EfficiencyModel::goodman(int m) {
  if (m < 2)
    throw std::invalid_argument("efficiency.m: must be an integer >= 2");
  return EfficiencyModel(EfficiencyFamily::Goodman, 0.0, m);
}

double EfficiencyModel::value(double x) const {
  require_nonneg(x);
  if (x == 0.0) return 0.0;
  switch (family_) {
    case EfficiencyFamily::ExpRatio:
      return std::exp(-a_ / x);
    case EfficiencyFamily::Goodman:
      // -expm1 keeps 1 - e^{-x} fully accurate for small x; the naive
      // difference loses ~x^{-1} ulp to cancellation.
      return ipow(-std::expm1(-x), m_);
  }
  return 0.0;
}

double EfficiencyModel::deriv(double x) const {
  require_nonneg(x);
  if (x == 0.0) return 0.0;
  switch (family_) {
    case EfficiencyFamily::ExpRatio:
      return a_ / (x * x) * std::exp(-a_ / x);
    case EfficiencyFamily::Goodman:
      return m_ * std::exp(-x) * ipow(-std::expm1(-x), m_ - 1);
  }
  return 0.0;
}

std::string EfficiencyModel::describe() const {
  std::ostringstream os;
  if (family_ == EfficiencyFamily::ExpRatio)
    os << "exp_ratio(a=" << a_ << ")";
  else
    os << "goodman(m=" << m_ << ")";
  return os.str();
}

RootResult solve_sinr_root(const EfficiencyModel& model, double eps,
                           double tol) {
  if (!(eps >= 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("eps: must be finite and >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("tol: must be > 0");

  const double lo_limit = 1e-6;
  double hi_limit = 1e3;
  if (eps > 0.0) hi_limit = std::min(hi_limit, (1.0 - 1e-12) / eps);
  if (hi_limit <= lo_limit)
    throw InfeasibleError("scan-range-empty",
                          "root scan range is empty: 1/eps <= 1e-6");

  const auto g = [&](double x) {
    return x * (1.0 - eps * x) * model.deriv(x) - model.value(x);
  };

  // Log-spaced sign scan. Points where both f and f' underflow to zero are
  // skipped so the spurious g = 0 plateau near the origin is not mistaken
  // for a root.
  const int scan_points = 1024;
  const double log_lo = std::log(lo_limit);
  const double log_hi = std::log(hi_limit);
  int sign_changes = 0;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  int bracket_sign_lo = 0;
  double prev_x = 0.0;
  int prev_sign = 0;
  for (int k = 0; k < scan_points; ++k) {
    const double x = std::exp(log_lo + (log_hi - log_lo) * k /
                                           (scan_points - 1));
    const double gx = g(x);
    const int sign = gx > 0.0 ? 1 : (gx < 0.0 ? -1 : 0);
    if (sign == 0) continue;
    if (prev_sign != 0 && sign != prev_sign) {
      ++sign_changes;
      if (sign_changes == 1) {
        bracket_lo = prev_x;
        bracket_hi = x;
        bracket_sign_lo = prev_sign;
      }
    }
    prev_sign = sign;
    prev_x = x;
  }
  if (sign_changes == 0)
    throw InfeasibleError(
        "bracket-not-found",
        "no sign change of x*(1-eps*x)*f'(x)-f(x) on the scan range; the "
        "efficiency parameterization is not sigmoidal on (0, 1/eps)");

  double lo = bracket_lo, hi = bracket_hi;
  int iterations = 0;
  double root = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      root = mid;
      break;
    }
    ++iterations;
    const double gm = g(mid);
    if (gm == 0.0) {
      root = mid;
      break;
    }
    if ((gm > 0.0 ? 1 : -1) == bracket_sign_lo)
      lo = mid;
    else
      hi = mid;
    root = 0.5 * (lo + hi);
  }

  RootResult result;
  result.value = root;
  result.residual = g(root);
  result.iterations = iterations;
  result.sign_changes = sign_changes;
  if (!(std::fabs(result.residual) <= tol))
    throw InfeasibleError("root-residual",
                          "bisection stalled with residual above tolerance");
  return result;
}

RootResult solve_beta(const EfficiencyModel& model, double tol) {
  return solve_sinr_root(model, 0.0, tol);
}

RootResult solve_gamma(const EfficiencyModel& model, int players, double tol) {
  if (players < 2)
    throw std::invalid_argument("players: must be >= 2 for a follower target");
  const double beta = solve_beta(model, tol).value;
  const double denom = 1.0 - (players - 2) * beta;
  if (!(denom > 0.0)) {
    std::ostringstream os;
    os << "follower damping undefined: 1-(K-2)*beta = " << denom << " <= 0";
    throw InfeasibleError("1-(K-2)*beta <= 0", os.str());
  }
  const double eps = (players - 1) * beta / denom;
  return solve_sinr_root(model, eps, tol);
}

double epsilon_L(int players, double processing_gain, int non_sensing,
                 double beta) {
  if (players < 1) throw std::invalid_argument("players: must be >= 1");
  if (non_sensing < 0 || non_sensing > players + 1)
    throw std::invalid_argument(
        "non_sensing: must lie in [0, players+1] for the damping ladder");
  if (!(processing_gain >= 1.0))
    throw std::invalid_argument("processing_gain: must be >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("beta: must be > 0");
  const double n = processing_gain;
  const double denom = n * n - n * (players + 1 - non_sensing) * beta;
  if (!(denom > 0.0)) {
    std::ostringstream os;
    os << "damping denominator N^2 - N*(K+1-L)*beta = " << denom
       << " <= 0 at L=" << non_sensing;
    throw InfeasibleError("N^2 - N*(K+1-L)*beta <= 0", os.str());
  }
  return (players + 2 - non_sensing) * beta / denom;
}

GammaLResult solve_gamma_L(const EfficiencyModel& model, int players,
                           double processing_gain, int non_sensing,
                           double tol) {
  const double beta = solve_beta(model, tol).value;
  GammaLResult out;
  out.epsilon = epsilon_L(players, processing_gain, non_sensing, beta);
  out.root = solve_sinr_root(model, out.epsilon, tol);
  return out;
}

}  // namespace eepc
