#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gslt/geometry.hpp"

namespace gslt {

// Row-major grayscale raster, intensities in [0, 1].
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0)
      : width(w), height(h), values(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {
    if (w < 1 || h < 1) throw std::invalid_argument("GrayImage: dimensions must be >= 1");
  }

  double& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }

  // Edge-replicated lookup.
  double at_clamped(int x, int y) const {
    x = std::clamp(x, 0, width - 1);
    y = std::clamp(y, 0, height - 1);
    return at(x, y);
  }

  void clamp01() {
    for (double& v : values) v = std::clamp(v, 0.0, 1.0);
  }
};

inline double luminance(double r, double g, double b) {
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

// Bilinear sample at (x, y) in pixel coordinates (integer coordinates hit
// pixel centers); samples outside the frame replicate the nearest edge.
inline double sample_bilinear(const GrayImage& img, double x, double y) {
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const double fx = x - x0;
  const double fy = y - y0;
  const double v00 = img.at_clamped(x0, y0);
  const double v10 = img.at_clamped(x0 + 1, y0);
  const double v01 = img.at_clamped(x0, y0 + 1);
  const double v11 = img.at_clamped(x0 + 1, y0 + 1);
  const double top = v00 + fx * (v10 - v00);
  const double bot = v01 + fx * (v11 - v01);
  return top + fy * (bot - top);
}

// Resample the box region of `frame` onto an out_size x out_size crop.
// Output pixel (i, j) samples the box at its pixel center, so a box that is
// an integer-aligned out_size window copies pixels verbatim.
inline GrayImage crop_warp(const GrayImage& frame, const BoundingBox& box, int out_size) {
  if (out_size < 1) throw std::invalid_argument("crop_warp: out_size must be >= 1");
  GrayImage out(out_size, out_size);
  const double sx = box.w / out_size;
  const double sy = box.h / out_size;
  for (int i = 0; i < out_size; ++i) {
    const double y = box.y + (i + 0.5) * sy - 0.5;
    for (int j = 0; j < out_size; ++j) {
      const double x = box.x + (j + 0.5) * sx - 0.5;
      out.at(j, i) = sample_bilinear(frame, x, y);
    }
  }
  return out;
}

}  // namespace gslt
