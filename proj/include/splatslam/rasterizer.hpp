#ifndef SPLATSLAM_RASTERIZER_HPP
#define SPLATSLAM_RASTERIZER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "splatslam/geometry.hpp"
#include "splatslam/map.hpp"

namespace splatslam {

struct CorrectionPlan;  // cbknn.hpp

/// Color + depth + silhouette raster triplet produced by one render call.
struct RenderedFrame {
  ColorImage color;
  ScalarImage depth;
  ScalarImage silhouette;
};

/// One culled, projected Gaussian in the per-frame working set.
struct SplatWorkItem {
  std::uint32_t index = 0;   // position in the map at cull time
  std::uint64_t id = 0;      // stable Gaussian id
  Vec2 center = Vec2::Zero();  // projected center, pixels
  double depth = 0.0;          // camera-frame z, meters
  double footprint = 0.0;      // projected radius = radius * fx / depth, pixels
};

/// Culls to camera depth in (near, far) and a contribution support
/// (3x footprint disc) touching the image, then sorts by ascending depth
/// (ties by id). Empty result is valid.
std::vector<SplatWorkItem> frustum_cull_and_sort(const GaussianMap& map,
                                                 const Pose& pose,
                                                 const PinholeCamera& cam);

/// Radial decay of Eq-1 form evaluated in pixel space:
/// opacity * exp(-|pixel - center|^2 / footprint^2).
double decay(const SplatWorkItem& item, double opacity, const Vec2& pixel);

struct CompositeInput {
  double f = 0.0;  // decay in [0,1]
  Vec3 color = Vec3::Zero();
  double depth = 0.0;
};

struct CompositeResult {
  Vec3 color = Vec3::Zero();
  double depth = 0.0;
  double silhouette = 0.0;
};

/// Front-to-back alpha compositing of an ordered item sequence.
CompositeResult composite_pixel(std::span<const CompositeInput> items);

/// Tile-based forward render. When a correction plan is supplied it must have
/// been built for this exact (map, pose, cam); corrected projected centers and
/// colors are substituted for plan neighbors, the map itself is never touched.
/// Deterministic for any thread count.
RenderedFrame render(const GaussianMap& map, const Pose& pose,
                     const PinholeCamera& cam,
                     const CorrectionPlan* plan = nullptr, int threads = 1);

/// Direct per-pixel reference renderer: no tiling, no parallelism. Used as the
/// independent oracle for the tiled path and to synthesize ground-truth frames.
RenderedFrame render_reference(const GaussianMap& map, const Pose& pose,
                               const PinholeCamera& cam,
                               const CorrectionPlan* plan = nullptr);

/// Partials of a scalar loss. Entries are indexed by map position at render
/// time; culled Gaussians keep exact zeros. Pose partials are taken w.r.t.
/// the 6 right-multiplicative tangent coordinates of perturb().
struct GradientBundle {
  std::vector<Vec3> d_mu;
  std::vector<double> d_opacity;
  std::vector<double> d_radius;
  std::vector<Vec3> d_color;
  Vec6 d_pose = Vec6::Zero();

  void resize(std::size_t n);
};

/// Ground truth and weighting for the tracking/mapping loss
///   L = sum_p [ L1(D - D_gt) + color_weight * L1(C - C_gt) ]
/// over pixels passing the silhouette mask (S > threshold) and depth validity.
struct LossContext {
  const RgbdFrame* ground_truth = nullptr;
  double color_weight = 0.6;
  double silhouette_threshold = 0.99;
  /// Tracking gates both terms on S > threshold and valid GT depth. With the
  /// mask off (initialization / map update) the color term covers every pixel
  /// and the depth term every valid-GT-depth pixel.
  bool use_silhouette_mask = true;
  /// Adds ssim_weight * (1 - SSIM(C, C_gt)) and its gradient when nonzero.
  double ssim_weight = 0.0;
  /// Optional fixed mask (row-major, 1 = included). Replaces the silhouette
  /// test so finite-difference probes see a locally smooth objective.
  const std::vector<std::uint8_t>* mask_override = nullptr;
};

struct RenderGradResult {
  RenderedFrame frame;
  double loss = 0.0;
  GradientBundle grads;
};

/// Forward render + loss + analytic gradients for all Gaussian parameters and
/// the 6 pose tangent coordinates. Correction offsets and color weights are
/// held constant unless the plan was built with differentiate_correction.
/// Throws NonFinite if any gradient is NaN/Inf.
RenderGradResult render_with_gradients(const GaussianMap& map, const Pose& pose,
                                       const PinholeCamera& cam,
                                       const CorrectionPlan* plan,
                                       const LossContext& ctx, int threads = 1);

/// Loss only (no gradients); used by finite-difference oracles.
double evaluate_loss(const GaussianMap& map, const Pose& pose,
                     const PinholeCamera& cam, const CorrectionPlan* plan,
                     const LossContext& ctx, int threads = 1);

/// Backward pass from per-pixel adjoints of (color, depth, silhouette).
GradientBundle backward_from_pixel_grads(
    const GaussianMap& map, const Pose& pose, const PinholeCamera& cam,
    const CorrectionPlan* plan, const ColorImage& g_color,
    const ScalarImage& g_depth, const ScalarImage& g_silhouette,
    int threads = 1);

}  // namespace splatslam

#endif  // SPLATSLAM_RASTERIZER_HPP
