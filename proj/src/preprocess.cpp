#include "ctphase/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ctphase/kernels.hpp"

namespace ctphase::prep {

Image2D apply_window(const Image2D& hu, const WindowSpec& w) {
  if (!(w.width > 0)) throw std::invalid_argument("window width must be > 0");
  const auto lo = static_cast<float>(w.center - w.width / 2.0);
  Image2D out(hu.rows, hu.cols);
  kernels::ops().window01(hu.px.data(), out.px.data(), hu.size(), lo,
                          static_cast<float>(w.width));
  return out;
}

Image2D resize_bilinear(const Image2D& img, int out_rows, int out_cols) {
  if (out_rows < 1 || out_cols < 1) throw std::invalid_argument("resize dims must be >= 1");
  if (img.rows < 1 || img.cols < 1) throw std::invalid_argument("resize of empty image");
  Image2D out(out_rows, out_cols);
  const double row_scale = static_cast<double>(img.rows) / out_rows;
  const double col_scale = static_cast<double>(img.cols) / out_cols;
  for (int r = 0; r < out_rows; ++r) {
    double sr = (r + 0.5) * row_scale - 0.5;
    sr = std::clamp(sr, 0.0, static_cast<double>(img.rows - 1));
    const int r0 = static_cast<int>(sr);
    const int r1 = std::min(r0 + 1, img.rows - 1);
    const double fr = sr - r0;
    for (int c = 0; c < out_cols; ++c) {
      double sc = (c + 0.5) * col_scale - 0.5;
      sc = std::clamp(sc, 0.0, static_cast<double>(img.cols - 1));
      const int c0 = static_cast<int>(sc);
      const int c1 = std::min(c0 + 1, img.cols - 1);
      const double fc = sc - c0;
      const double top = (1.0 - fc) * img.at(r0, c0) + fc * img.at(r0, c1);
      const double bot = (1.0 - fc) * img.at(r1, c0) + fc * img.at(r1, c1);
      out.at(r, c) = static_cast<float>((1.0 - fr) * top + fr * bot);
    }
  }
  return out;
}

FeatureVector extract_features(const Image2D& img, const FeatureConfig& cfg) {
  if (cfg.bins < 2) throw std::invalid_argument("bins must be >= 2");
  if (cfg.grid != 1 && cfg.grid != 2) throw std::invalid_argument("grid must be 1 or 2");
  if (img.size() == 0) throw std::invalid_argument("features of empty image");

  FeatureVector out(static_cast<std::size_t>(cfg.dim()), 0.0);
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(cfg.bins));
  const auto& k = kernels::ops();
  int region = 0;
  for (int gr = 0; gr < cfg.grid; ++gr) {
    const int r0 = gr * img.rows / cfg.grid;
    const int r1 = (gr + 1) * img.rows / cfg.grid;
    for (int gc = 0; gc < cfg.grid; ++gc, ++region) {
      const int c0 = gc * img.cols / cfg.grid;
      const int c1 = (gc + 1) * img.cols / cfg.grid;
      const std::size_t total =
          static_cast<std::size_t>(r1 - r0) * static_cast<std::size_t>(c1 - c0);
      if (total == 0) continue;
      std::fill(counts.begin(), counts.end(), 0u);
      for (int r = r0; r < r1; ++r) {
        k.histogram(img.px.data() + static_cast<std::size_t>(r) * img.cols + c0,
                    static_cast<std::size_t>(c1 - c0),
                    static_cast<std::uint32_t>(cfg.bins), counts.data());
      }
      double* dst = out.data() + static_cast<std::size_t>(region) * cfg.bins;
      for (int b = 0; b < cfg.bins; ++b) {
        dst[b] = static_cast<double>(counts[b]) / static_cast<double>(total);
      }
    }
  }
  return out;
}

}  // namespace ctphase::prep
