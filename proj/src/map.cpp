#include "splatslam/map.hpp"

#include <algorithm>

namespace splatslam {

std::uint64_t GaussianMap::add(const Vec3& mu, double opacity, double radius,
                               const Vec3& color, std::uint32_t created_frame) {
  Gaussian g;
  g.id = next_id_++;
  g.mu = mu;
  g.opacity = opacity;
  g.radius = radius;
  g.color = color;
  gaussians_.push_back(g);
  created_frame_.push_back(created_frame);
  return g.id;
}

std::size_t GaussianMap::prune(double min_opacity, double max_radius) {
  std::size_t kept = 0;
  for (std::size_t i = 0; i < gaussians_.size(); ++i) {
    const Gaussian& g = gaussians_[i];
    if (g.opacity < min_opacity || g.radius > max_radius) continue;
    if (kept != i) {
      gaussians_[kept] = gaussians_[i];
      created_frame_[kept] = created_frame_[i];
    }
    ++kept;
  }
  std::size_t removed = gaussians_.size() - kept;
  gaussians_.resize(kept);
  created_frame_.resize(kept);
  return removed;
}

void GaussianMap::clamp_parameters(double min_radius) {
  for (Gaussian& g : gaussians_) {
    g.opacity = std::clamp(g.opacity, 0.0, 1.0);
    g.radius = std::max(g.radius, min_radius);
    for (int c = 0; c < 3; ++c) {
      g.color[c] = std::clamp(g.color[c], 0.0, 1.0);
    }
  }
}

}  // namespace splatslam
