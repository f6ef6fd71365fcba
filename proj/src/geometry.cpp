#include "splatslam/geometry.hpp"

#include <cmath>

#include "splatslam/errors.hpp"

namespace splatslam {

Pose compose(const Pose& a, const Pose& b) {
  Pose out;
  out.rotation = a.rotation * b.rotation;
  out.translation = a.rotation * b.translation + a.translation;
  return out;
}

Pose inverse(const Pose& p) {
  Pose out;
  out.rotation = p.rotation.transpose();
  out.translation = -(p.rotation.transpose() * p.translation);
  return out;
}

Pose predict_pose(const Pose& e_prev, const Pose& e_curr) {
  return compose(e_curr, compose(inverse(e_prev), e_curr));
}

namespace {

Mat3 skew(const Vec3& v) {
  Mat3 s;
  s << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return s;
}

Mat3 so3_exp(const Vec3& omega) {
  double angle = omega.norm();
  if (angle < 1e-12) {
    return Mat3::Identity() + skew(omega);
  }
  return Eigen::AngleAxisd(angle, omega / angle).toRotationMatrix();
}

Vec3 so3_log(const Mat3& r) {
  Eigen::AngleAxisd aa(r);
  return aa.angle() * aa.axis();
}

Mat3 left_jacobian(const Vec3& omega) {
  double theta = omega.norm();
  if (theta < 1e-9) return Mat3::Identity() + 0.5 * skew(omega);
  Mat3 w = skew(omega / theta);
  double c1 = (1.0 - std::cos(theta)) / theta;
  double c2 = (theta - std::sin(theta)) / theta;
  return Mat3::Identity() + c1 * w + c2 * w * w;
}

Mat3 left_jacobian_inverse(const Vec3& omega) {
  double theta = omega.norm();
  if (theta < 1e-9) return Mat3::Identity() - 0.5 * skew(omega);
  Mat3 w = skew(omega / theta);
  double c = 1.0 / (theta * theta) -
             (1.0 + std::cos(theta)) / (2.0 * theta * std::sin(theta));
  return Mat3::Identity() - 0.5 * skew(omega) + c * (theta * theta) * w * w;
}

}  // namespace

Pose se3_exp(const Vec6& xi) {
  Vec3 v = xi.head<3>();
  Vec3 omega = xi.tail<3>();
  Pose out;
  out.rotation = so3_exp(omega);
  out.translation = left_jacobian(omega) * v;
  return out;
}

Vec6 se3_log(const Pose& p) {
  Vec3 omega = so3_log(p.rotation);
  Vec3 v = left_jacobian_inverse(omega) * p.translation;
  Vec6 xi;
  xi << v, omega;
  return xi;
}

Pose perturb(const Pose& p, const Vec6& xi) { return compose(p, se3_exp(xi)); }

double rotation_angle(const Mat3& r) {
  double c = 0.5 * (r.trace() - 1.0);
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

double translation_distance(const Pose& a, const Pose& b) {
  return (compose(inverse(a), b)).translation.norm();
}

double rotation_distance(const Pose& a, const Pose& b) {
  return rotation_angle(compose(inverse(a), b).rotation);
}

std::optional<ProjectedPoint> project(const Vec3& mu, const Pose& pose,
                                      const PinholeCamera& cam) {
  Vec3 p = pose.to_camera(mu);
  if (p.z() <= 0.0) return std::nullopt;
  ProjectedPoint out;
  out.pixel = Vec2(cam.fx * p.x() / p.z() + cam.cx,
                   cam.fy * p.y() / p.z() + cam.cy);
  out.depth = p.z();
  return out;
}

Vec3 backproject(const Vec2& pixel, double depth, const Pose& pose,
                 const PinholeCamera& cam) {
  if (depth <= 0.0) throw InvalidDepth("backproject: depth must be > 0");
  Vec3 p_cam((pixel.x() - cam.cx) / cam.fx * depth,
             (pixel.y() - cam.cy) / cam.fy * depth, depth);
  return pose.to_world(p_cam);
}

}  // namespace splatslam
