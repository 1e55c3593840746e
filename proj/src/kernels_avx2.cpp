// AVX2 kernel variants. Element-wise kernels deliberately use unfused
// mul/add/div so their results are bit-identical to the scalar reference;
// dot uses FMA with a fixed-order horizontal reduction.

#if defined(CTPHASE_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>

#include "ctphase/kernels.hpp"

namespace ctphase::kernels::avx2 {

namespace {

void rescale_hu_avx2(const std::int32_t* raw, float* hu, std::size_t n, float slope,
                     float intercept) {
  const __m256 vs = _mm256_set1_ps(slope);
  const __m256 vi = _mm256_set1_ps(intercept);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(raw + i));
    const __m256 f = _mm256_cvtepi32_ps(r);
    _mm256_storeu_ps(hu + i, _mm256_add_ps(_mm256_mul_ps(f, vs), vi));
  }
  for (; i < n; ++i) {
    hu[i] = static_cast<float>(raw[i]) * slope + intercept;
  }
}

void window01_avx2(const float* hu, float* out, std::size_t n, float lo, float width) {
  const __m256 vlo = _mm256_set1_ps(lo);
  const __m256 vw = _mm256_set1_ps(width);
  const __m256 zero = _mm256_setzero_ps();
  const __m256 one = _mm256_set1_ps(1.0f);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 v = _mm256_div_ps(_mm256_sub_ps(_mm256_loadu_ps(hu + i), vlo), vw);
    _mm256_storeu_ps(out + i, _mm256_min_ps(one, _mm256_max_ps(zero, v)));
  }
  for (; i < n; ++i) {
    const float v = (hu[i] - lo) / width;
    out[i] = std::min(1.0f, std::max(0.0f, v));
  }
}

void histogram_avx2(const float* px, std::size_t n, std::uint32_t bins,
                    std::uint32_t* counts) {
  const __m256 vb = _mm256_set1_ps(static_cast<float>(bins));
  const __m256i vlast = _mm256_set1_epi32(static_cast<std::int32_t>(bins) - 1);
  const __m256i vzero = _mm256_setzero_si256();
  alignas(32) std::int32_t idx[8];
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_loadu_ps(px + i), vb));
    v = _mm256_min_epi32(vlast, _mm256_max_epi32(vzero, v));
    _mm256_store_si256(reinterpret_cast<__m256i*>(idx), v);
    for (int k = 0; k < 8; ++k) ++counts[idx[k]];
  }
  const auto last = static_cast<std::int32_t>(bins) - 1;
  for (; i < n; ++i) {
    auto b = static_cast<std::int32_t>(px[i] * static_cast<float>(bins));
    b = std::min(last, std::max(0, b));
    ++counts[b];
  }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace

const Ops kOps = {
    "avx2", &rescale_hu_avx2, &window01_avx2, &histogram_avx2, &dot_avx2,
};

}  // namespace ctphase::kernels::avx2

#endif  // CTPHASE_HAVE_AVX2
