// AVX2 (256-bit, 4 x double) kernels. Compiled with -mavx2; only reached
// after the dispatcher has confirmed CPU support. Tails use the scalar path.

#include <immintrin.h>

#include <cmath>

#include "kernels_detail.hpp"

namespace crp::kernels::detail {

namespace {

constexpr std::size_t kLanes = 4;

double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double horizontal_max(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double trapezoid_avx2(std::span<const double> y, double h) {
  if (y.size() < 2) return 0.0;
  const std::size_t end = y.size() - 1;
  std::size_t i = 1;
  __m256d acc = _mm256_setzero_pd();
  for (; i + kLanes <= end; i += kLanes) acc = _mm256_add_pd(acc, _mm256_loadu_pd(y.data() + i));
  double interior = horizontal_sum(acc);
  for (; i < end; ++i) interior += y[i];
  return h * (0.5 * (y.front() + y.back()) + interior);
}

double sup_norm_diff_avx2(std::span<const double> a, std::span<const double> b) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
    m = _mm256_max_pd(m, _mm256_andnot_pd(sign, d));
  }
  double r = horizontal_max(m);
  for (; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

void blend_avx2(std::span<double> out, std::span<const double> prev, double r) {
  const __m256d keep = _mm256_set1_pd(1.0 - r);
  const __m256d w = _mm256_set1_pd(r);
  std::size_t i = 0;
  for (; i + kLanes <= out.size(); i += kLanes) {
    const __m256d c = _mm256_mul_pd(keep, _mm256_loadu_pd(out.data() + i));
    const __m256d p = _mm256_mul_pd(w, _mm256_loadu_pd(prev.data() + i));
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(c, p));
  }
  blend_scalar(out.subspan(i), prev.subspan(i), r);
}

// Branch-free version of optimal_control() for the arctan and log families:
// every case is evaluated and the result picked by mask, in the same order
// of precedence as the scalar code.
template <bool kArctan>
void control_update_closed_form(const ControlBounds& c, std::span<const double> lambda1,
                                std::span<const double> lambda2, std::span<const double> inactive,
                                std::span<double> out) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d x_max = _mm256_set1_pd(c.x_max);
  const __m256d omega1 = _mm256_set1_pd(c.omega1);
  const __m256d slope_max = _mm256_set1_pd(c.slope_at_max);
  const __m256d slope_zero = _mm256_set1_pd(c.slope_at_zero);
  const __m256d ab = _mm256_set1_pd(c.ab);
  const __m256d b = _mm256_set1_pd(c.b);

  std::size_t i = 0;
  for (; i + kLanes <= out.size(); i += kLanes) {
    const __m256d l1 = _mm256_loadu_pd(lambda1.data() + i);
    const __m256d l2 = _mm256_loadu_pd(lambda2.data() + i);
    const __m256d in = _mm256_loadu_pd(inactive.data() + i);
    const __m256d coeff = _mm256_mul_pd(_mm256_sub_pd(l1, l2), in);

    const __m256d positive = _mm256_cmp_pd(coeff, zero, _CMP_GT_OQ);
    const __m256d saturate = _mm256_cmp_pd(_mm256_mul_pd(coeff, slope_max), omega1, _CMP_GT_OQ);
    const __m256d shut_off = _mm256_cmp_pd(_mm256_mul_pd(coeff, slope_zero), omega1, _CMP_LT_OQ);

    const __m256d y = _mm256_div_pd(omega1, coeff);
    const __m256d t = _mm256_max_pd(_mm256_sub_pd(_mm256_div_pd(ab, y), one), zero);
    __m256d z = kArctan ? _mm256_div_pd(_mm256_sqrt_pd(t), b) : _mm256_div_pd(t, b);
    z = _mm256_min_pd(_mm256_max_pd(z, zero), x_max);

    __m256d result = _mm256_blendv_pd(z, zero, shut_off);
    result = _mm256_blendv_pd(result, x_max, saturate);
    result = _mm256_and_pd(result, positive);
    _mm256_storeu_pd(out.data() + i, result);
  }
  control_update_scalar(c, lambda1.subspan(i), lambda2.subspan(i), inactive.subspan(i),
                        out.subspan(i));
}

void control_update_avx2(const ControlBounds& bounds, std::span<const double> lambda1,
                         std::span<const double> lambda2, std::span<const double> inactive,
                         std::span<double> out) {
  switch (bounds.family) {
    case InfluenceFamily::ScaledArctan:
      control_update_closed_form<true>(bounds, lambda1, lambda2, inactive, out);
      return;
    case InfluenceFamily::ScaledLog:
      control_update_closed_form<false>(bounds, lambda1, lambda2, inactive, out);
      return;
    case InfluenceFamily::PowerLaw:
      // No vector pow; the power-law inverse stays scalar.
      control_update_scalar(bounds, lambda1, lambda2, inactive, out);
      return;
  }
}

}  // namespace

const KernelTable& avx2_kernels() noexcept {
  static const KernelTable table{Isa::Avx2,          "avx2",
                                 &trapezoid_avx2,    &sup_norm_diff_avx2,
                                 &blend_avx2,        &control_update_avx2};
  return table;
}

}  // namespace crp::kernels::detail
