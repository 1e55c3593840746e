#pragma once

// HU-to-model preprocessing: window normalization to [0,1], bilinear
// resizing, and gridded histogram features.

#include <vector>

#include "ctphase/image.hpp"

namespace ctphase::prep {

struct WindowSpec {
  double center = 50.0;
  double width = 400.0;  // must be > 0
};

struct FeatureConfig {
  int bins = 32;
  int grid = 2;  // 1 or 2
  int dim() const { return bins * grid * grid; }
  bool operator==(const FeatureConfig&) const = default;
};

using FeatureVector = std::vector<double>;

// clamp((hu - (center - width/2)) / width, 0, 1), monotone in HU.
Image2D apply_window(const Image2D& hu, const WindowSpec& w);

// Bilinear resize, sampling source at (i + 0.5) * scale - 0.5 with edge
// clamping. Resizing to the same dimensions is an exact copy.
Image2D resize_bilinear(const Image2D& img, int out_rows, int out_cols);

// Per-region L1-normalized histograms over `bins` uniform bins on [0,1],
// concatenated in row-major region order. A value on a bin edge lands in the
// higher bin, except 1.0 which stays in the last bin. Expects a windowed
// image.
FeatureVector extract_features(const Image2D& img, const FeatureConfig& cfg);

}  // namespace ctphase::prep
