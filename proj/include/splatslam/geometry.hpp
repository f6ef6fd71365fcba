#ifndef SPLATSLAM_GEOMETRY_HPP
#define SPLATSLAM_GEOMETRY_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cstdint>
#include <optional>

#include "splatslam/image.hpp"

namespace splatslam {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;

/// One isotropic splat primitive: the map atom.
struct Gaussian {
  std::uint64_t id = 0;
  Vec3 mu = Vec3::Zero();    // world position, meters
  double opacity = 0.0;      // in [0,1]
  double radius = 0.0;       // > 0, meters
  Vec3 color = Vec3::Zero(); // RGB, each channel in [0,1]
};

/// Rigid camera-to-world transform. x_world = rotation * x_camera + translation.
struct Pose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static Pose identity() { return {}; }

  Vec3 to_world(const Vec3& p_cam) const { return rotation * p_cam + translation; }
  Vec3 to_camera(const Vec3& p_world) const {
    return rotation.transpose() * (p_world - translation);
  }
};

Pose compose(const Pose& a, const Pose& b);
Pose inverse(const Pose& p);

/// Constant-velocity prediction: replays the relative motion from e_prev to
/// e_curr on top of e_curr (composition on SE(3), not matrix addition).
Pose predict_pose(const Pose& e_prev, const Pose& e_curr);

/// SE(3) exponential/log. Tangent layout: [v; omega] (translation first).
Pose se3_exp(const Vec6& xi);
Vec6 se3_log(const Pose& p);

/// Right-multiplicative perturbation: p * exp(xi). The 6 tangent coordinates
/// of xi are the pose parameters differentiated by the rasterizer.
Pose perturb(const Pose& p, const Vec6& xi);

/// Rotation angle of the relative transform a^-1 b, radians.
double rotation_angle(const Mat3& r);
double translation_distance(const Pose& a, const Pose& b);
double rotation_distance(const Pose& a, const Pose& b);

struct PinholeCamera {
  double fx = 0.0, fy = 0.0;  // focal lengths, pixels
  double cx = 0.0, cy = 0.0;  // principal point, pixels
  int width = 0, height = 0;  // image size, pixels
  double near = 0.01, far = 100.0;  // depth clip planes, meters
};

struct ProjectedPoint {
  Vec2 pixel;
  double depth;  // camera-frame z, meters
};

/// Pinhole projection of a world point. Empty when the point lands at or
/// behind the camera plane (z <= 0) — a cull signal, not a failure.
std::optional<ProjectedPoint> project(const Vec3& mu, const Pose& pose,
                                      const PinholeCamera& cam);

/// Inverse of project. Throws InvalidDepth when depth <= 0.
Vec3 backproject(const Vec2& pixel, double depth, const Pose& pose,
                 const PinholeCamera& cam);

/// One RGB-D observation. Depth value 0 marks an invalid measurement.
struct RgbdFrame {
  ColorImage color;
  ScalarImage depth;
  double timestamp = 0.0;
};

}  // namespace splatslam

#endif  // SPLATSLAM_GEOMETRY_HPP
