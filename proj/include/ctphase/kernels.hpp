#pragma once

// Runtime-dispatched inner loops. Each kernel has a scalar reference
// implementation; an AVX2 variant is selected at startup when the CPU
// supports AVX2 and FMA. rescale_hu, window01 and histogram are element-wise
// and bit-identical across backends (no fused ops, same formulas); dot
// accumulates in lane order, so it is deterministic per backend but may
// differ from the scalar sum by rounding.

#include <cstddef>
#include <cstdint>

namespace ctphase::kernels {

struct Ops {
  const char* name;
  // hu[i] = float(raw[i]) * slope + intercept
  void (*rescale_hu)(const std::int32_t* raw, float* hu, std::size_t n, float slope,
                     float intercept);
  // out[i] = clamp((hu[i] - lo) / width, 0, 1)
  void (*window01)(const float* hu, float* out, std::size_t n, float lo, float width);
  // counts[clamp(trunc(px[i] * bins), 0, bins - 1)] += 1
  void (*histogram)(const float* px, std::size_t n, std::uint32_t bins, std::uint32_t* counts);
  // plain dot product
  double (*dot)(const double* a, const double* b, std::size_t n);
};

enum class Backend { kScalar, kAvx2 };

bool available(Backend b);
Backend active();
// Switches the active table; returns false (and changes nothing) when the
// backend is unavailable on this machine.
bool select(Backend b);
const Ops& ops();
// Direct table access for a specific backend; requires available(b).
const Ops& table(Backend b);
const char* backend_name(Backend b);

}  // namespace ctphase::kernels
