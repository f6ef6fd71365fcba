#ifndef SPLATSLAM_IMAGE_HPP
#define SPLATSLAM_IMAGE_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace splatslam {

/// Dense row-major raster with a fixed channel count. Values are doubles;
/// color channels live in [0,1], depth in meters (0 = invalid/uncovered).
template <int Channels>
struct Raster {
  int width = 0;
  int height = 0;
  std::vector<double> data;  // height * width * Channels

  Raster() = default;
  Raster(int w, int h, double fill = 0.0)
      : width(w), height(h),
        data(static_cast<std::size_t>(w) * h * Channels, fill) {}

  double& at(int x, int y, int c = 0) {
    assert(x >= 0 && x < width && y >= 0 && y < height && c < Channels);
    return data[(static_cast<std::size_t>(y) * width + x) * Channels + c];
  }
  double at(int x, int y, int c = 0) const {
    assert(x >= 0 && x < width && y >= 0 && y < height && c < Channels);
    return data[(static_cast<std::size_t>(y) * width + x) * Channels + c];
  }

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }
  bool same_size(const Raster& o) const {
    return width == o.width && height == o.height;
  }
  bool empty() const { return data.empty(); }
};

using ColorImage = Raster<3>;
using ScalarImage = Raster<1>;

}  // namespace splatslam

#endif  // SPLATSLAM_IMAGE_HPP
