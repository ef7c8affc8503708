#include <immintrin.h>

#include <cmath>
#include <limits>

#include "eepc/kernels.hpp"

// AVX2+FMA lane. exp() is inlined as the classic Cephes rational
// approximation (range reduction by log2(e), degree-2/3 numerator/denominator
// in r^2), accurate to a couple of ulp on the clamp range, with hard
// underflow to 0 below -708.4 so tiny SINRs behave like the scalar path.
// The reduction also yields e^x - 1 without cancellation when n = 0, which
// the Goodman family needs: forming 1 - e^{-x} from a rounded e^{-x} loses
// ~x^{-1} ulp for small x.

namespace eepc::kernels::detail {

namespace {

struct ExpPair {
  __m256d exp;    // e^x, hard underflow/overflow at the clamp range
  __m256d expm1;  // e^x - 1, exact through x = 0
};

inline ExpPair exp_pair_pd(__m256d x) {
  const __m256d hi_cut = _mm256_set1_pd(709.782712893383996843);
  const __m256d lo_cut = _mm256_set1_pd(-708.396418532264106224);
  const __m256d underflow = _mm256_cmp_pd(x, lo_cut, _CMP_LT_OS);
  const __m256d overflow = _mm256_cmp_pd(x, hi_cut, _CMP_GT_OS);
  __m256d xc = _mm256_min_pd(_mm256_max_pd(x, lo_cut), hi_cut);

  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d n = _mm256_round_pd(_mm256_mul_pd(xc, log2e),
                                    _MM_FROUND_TO_NEAREST_INT |
                                        _MM_FROUND_NO_EXC);
  // r = x - n*ln2, split into a high and a low part for accuracy.
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
  __m256d r = _mm256_fnmadd_pd(n, ln2_hi, xc);
  r = _mm256_fnmadd_pd(n, ln2_lo, r);
  const __m256d rr = _mm256_mul_pd(r, r);

  __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
  p = _mm256_fmadd_pd(p, rr, _mm256_set1_pd(3.02994407707441961300e-2));
  p = _mm256_fmadd_pd(p, rr, _mm256_set1_pd(9.99999999999999999910e-1));
  p = _mm256_mul_pd(p, r);
  __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
  q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.52448340349684104192e-3));
  q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.27265548208155028766e-1));
  q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.00000000000000000005e0));
  // e^r - 1 = 2 r P(r^2) / (Q(r^2) - r P(r^2)).
  const __m256d s = _mm256_mul_pd(_mm256_set1_pd(2.0),
                                  _mm256_div_pd(p, _mm256_sub_pd(q, p)));
  __m256d e = _mm256_add_pd(s, _mm256_set1_pd(1.0));

  // Scale by 2^n through the exponent bits; n is in [-1022, 1025] here.
  const __m128i n32 = _mm256_cvtpd_epi32(n);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i bits =
      _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  e = _mm256_mul_pd(e, _mm256_castsi256_pd(bits));

  e = _mm256_blendv_pd(e, _mm256_setzero_pd(), underflow);
  e = _mm256_blendv_pd(
      e, _mm256_set1_pd(std::numeric_limits<double>::infinity()), overflow);

  // |x| < ln2/2 reduces with n = 0; there e^x - 1 is the rational term s
  // itself. Elsewhere e^x is far enough from 1 that e - 1 is safe.
  const __m256d n_zero =
      _mm256_cmp_pd(n, _mm256_setzero_pd(), _CMP_EQ_OS);
  const __m256d full = _mm256_sub_pd(e, _mm256_set1_pd(1.0));
  ExpPair out;
  out.exp = e;
  out.expm1 = _mm256_blendv_pd(full, s, n_zero);
  return out;
}

inline __m256d exp_pd(__m256d x) { return exp_pair_pd(x).exp; }

inline __m256d ipow_pd(__m256d base, int n) {
  __m256d r = _mm256_set1_pd(1.0);
  __m256d b = base;
  while (n > 0) {
    if (n & 1) r = _mm256_mul_pd(r, b);
    b = _mm256_mul_pd(b, b);
    n >>= 1;
  }
  return r;
}

inline __m256d f_of_sinr(__m256d sinr, EfficiencyFamily family, double a,
                         int m) {
  if (family == EfficiencyFamily::ExpRatio) {
    const __m256d t =
        _mm256_div_pd(_mm256_set1_pd(-a), sinr);  // x=0 -> -inf -> f=0
    return exp_pd(t);
  }
  const __m256d em1 =
      exp_pair_pd(_mm256_sub_pd(_mm256_setzero_pd(), sinr)).expm1;
  return ipow_pd(_mm256_sub_pd(_mm256_setzero_pd(), em1), m);
}

double f_scalar(double x, EfficiencyFamily family, double a, int m) {
  if (family == EfficiencyFamily::ExpRatio)
    return x == 0.0 ? 0.0 : std::exp(-a / x);
  double r = 1.0, b = -std::expm1(-x);
  while (m > 0) {
    if (m & 1) r *= b;
    b *= b;
    m >>= 1;
  }
  return r;
}

}  // namespace

void eval_f_batch_avx2(const EfficiencyModel& model, std::span<const double> x,
                       std::span<double> out) {
  const EfficiencyFamily family = model.family();
  const double a = model.a();
  const int m = model.m();
  std::size_t k = 0;
  for (; k + 4 <= x.size(); k += 4) {
    const __m256d v = _mm256_loadu_pd(x.data() + k);
    _mm256_storeu_pd(out.data() + k, f_of_sinr(v, family, a, m));
  }
  for (; k < x.size(); ++k) out[k] = f_scalar(x[k], family, a, m);
}

void utility_grid_avx2(const EfficiencyModel& model, double rate,
                       double gain_own, double gain_other, double noise,
                       std::span<const double> own,
                       std::span<const double> other, std::span<double> out) {
  const EfficiencyFamily family = model.family();
  const double a = model.a();
  const int m = model.m();
  const std::size_t n = own.size();
  const __m256d rate_v = _mm256_set1_pd(rate);
  const __m256d gain_v = _mm256_set1_pd(gain_own);
  for (std::size_t j = 0; j < other.size(); ++j) {
    const double denom = other[j] * gain_other + noise;
    const __m256d denom_v = _mm256_set1_pd(denom);
    double* row = out.data() + j * n;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      const __m256d p = _mm256_loadu_pd(own.data() + i);
      const __m256d sinr =
          _mm256_div_pd(_mm256_mul_pd(p, gain_v), denom_v);
      const __m256d f = f_of_sinr(sinr, family, a, m);
      _mm256_storeu_pd(row + i,
                       _mm256_div_pd(_mm256_mul_pd(rate_v, f), p));
    }
    for (; i < n; ++i) {
      const double sinr = own[i] * gain_own / denom;
      row[i] = rate * f_scalar(sinr, family, a, m) / own[i];
    }
  }
}

}  // namespace eepc::kernels::detail
