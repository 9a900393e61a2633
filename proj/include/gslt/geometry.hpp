#pragma once

#include <algorithm>
#include <cmath>

namespace gslt {

// Axis-aligned box: top-left corner plus extent, in pixels. Real-valued so
// sub-pixel motion and scaling round-trip without quantization.
struct BoundingBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double area() const { return w * h; }
  double cx() const { return x + 0.5 * w; }
  double cy() const { return y + 0.5 * h; }

  bool valid() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(w) &&
           std::isfinite(h) && w > 0.0 && h > 0.0;
  }
};

inline double intersection_area(const BoundingBox& a, const BoundingBox& b) {
  const double iw = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
  const double ih = std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  return iw * ih;
}

inline bool intersects(const BoundingBox& a, const BoundingBox& b) {
  return intersection_area(a, b) > 0.0;
}

}  // namespace gslt
