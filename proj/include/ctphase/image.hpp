#pragma once

#include <cstddef>
#include <vector>

namespace ctphase {

// Row-major 2D image of real values (Hounsfield units or normalized [0,1]).
struct Image2D {
  int rows = 0;
  int cols = 0;
  std::vector<float> px;

  Image2D() = default;
  Image2D(int r, int c, float fill = 0.0f)
      : rows(r), cols(c), px(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {}

  float& at(int r, int c) { return px[static_cast<std::size_t>(r) * cols + c]; }
  float at(int r, int c) const { return px[static_cast<std::size_t>(r) * cols + c]; }
  std::size_t size() const { return px.size(); }

  bool operator==(const Image2D&) const = default;
};

}  // namespace ctphase
