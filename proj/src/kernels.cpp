#include "ctphase/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace ctphase::kernels {

namespace {

void rescale_hu_scalar(const std::int32_t* raw, float* hu, std::size_t n, float slope,
                       float intercept) {
  for (std::size_t i = 0; i < n; ++i) {
    hu[i] = static_cast<float>(raw[i]) * slope + intercept;
  }
}

void window01_scalar(const float* hu, float* out, std::size_t n, float lo, float width) {
  for (std::size_t i = 0; i < n; ++i) {
    const float v = (hu[i] - lo) / width;
    out[i] = std::min(1.0f, std::max(0.0f, v));
  }
}

void histogram_scalar(const float* px, std::size_t n, std::uint32_t bins,
                      std::uint32_t* counts) {
  const auto last = static_cast<std::int32_t>(bins) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    auto idx = static_cast<std::int32_t>(px[i] * static_cast<float>(bins));
    idx = std::min(last, std::max(0, idx));
    ++counts[idx];
  }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

constexpr Ops kScalarOps = {
    "scalar", &rescale_hu_scalar, &window01_scalar, &histogram_scalar, &dot_scalar,
};

bool avx2_cpu_supported() {
#if defined(CTPHASE_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

#if defined(CTPHASE_HAVE_AVX2)
namespace avx2 {
extern const Ops kOps;  // defined in kernels_avx2.cpp
}
#endif

bool available(Backend b) {
  switch (b) {
    case Backend::kScalar: return true;
    case Backend::kAvx2: return avx2_cpu_supported();
  }
  return false;
}

const Ops& table(Backend b) {
  switch (b) {
    case Backend::kScalar: return kScalarOps;
    case Backend::kAvx2:
#if defined(CTPHASE_HAVE_AVX2)
      if (avx2_cpu_supported()) return avx2::kOps;
#endif
      throw std::runtime_error("avx2 kernels unavailable on this machine");
  }
  return kScalarOps;
}

const char* backend_name(Backend b) {
  return b == Backend::kAvx2 ? "avx2" : "scalar";
}

const Ops& ops() {
  const Ops* p = g_active.load(std::memory_order_acquire);
  if (p == nullptr) {
    p = available(Backend::kAvx2) ? &table(Backend::kAvx2) : &kScalarOps;
    g_active.store(p, std::memory_order_release);
  }
  return *p;
}

Backend active() {
  return &ops() == &kScalarOps ? Backend::kScalar : Backend::kAvx2;
}

bool select(Backend b) {
  if (!available(b)) return false;
  g_active.store(&table(b), std::memory_order_release);
  return true;
}

}  // namespace ctphase::kernels
