#ifndef SPLATSLAM_MAP_HPP
#define SPLATSLAM_MAP_HPP

#include <cstdint>
#include <vector>

#include "splatslam/geometry.hpp"

namespace splatslam {

/// Ordered collection of Gaussians with stable identifiers: the persistent
/// scene state. Ids are never reused; pruning compacts storage but keeps
/// the surviving order.
class GaussianMap {
 public:
  std::uint64_t add(const Vec3& mu, double opacity, double radius,
                    const Vec3& color, std::uint32_t created_frame);

  std::size_t size() const { return gaussians_.size(); }
  bool empty() const { return gaussians_.empty(); }

  const Gaussian& operator[](std::size_t i) const { return gaussians_[i]; }
  Gaussian& at(std::size_t i) { return gaussians_[i]; }
  std::uint32_t created_frame(std::size_t i) const { return created_frame_[i]; }

  const std::vector<Gaussian>& gaussians() const { return gaussians_; }

  /// Removes Gaussians with opacity < min_opacity or radius > max_radius.
  /// Returns the number removed.
  std::size_t prune(double min_opacity, double max_radius);

  /// Re-applies parameter invariants: opacity and color clamped to [0,1],
  /// radius clamped to at least min_radius.
  void clamp_parameters(double min_radius = 1e-6);

  std::uint64_t next_id() const { return next_id_; }
  void set_next_id(std::uint64_t id) { next_id_ = id; }

 private:
  std::vector<Gaussian> gaussians_;
  std::vector<std::uint32_t> created_frame_;
  std::uint64_t next_id_ = 0;
};

}  // namespace splatslam

#endif  // SPLATSLAM_MAP_HPP
