#ifndef SPLATSLAM_CBKNN_HPP
#define SPLATSLAM_CBKNN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "splatslam/geometry.hpp"
#include "splatslam/map.hpp"
#include "splatslam/rasterizer.hpp"

namespace splatslam {

enum class NeighborMetric {
  kContribution,    // rank by decay value at the evaluation point (default)
  kScreenDistance,  // rank by pixel distance to the evaluation point
};

struct SmoothingConfig {
  double alpha = 0.2;    // offset step, pixels; paper range [0.1,0.3], 0 = off
  double epsilon = 1e-6;
  int k0 = 8;            // baseline neighbor count, >= 2
  double beta = 0.3;
  int grid = 8;          // density statistics cell size, pixels
  double t_max = 0.3;            // motion normalization, meters
  double theta_max = 0.5235987755982988;  // 30 degrees, radians
  int fixed_k = 0;       // > 0 overrides adaptive K everywhere (ablations)
  NeighborMetric metric = NeighborMetric::kContribution;
  bool per_pixel = false;        // exact per-pixel neighbor sets (ablation)
  bool correct_in_3d = false;    // lift the 2D shift to 3D at the same depth
  bool differentiate_correction = false;  // gradients flow through Eqs. 5-7

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

/// Per-cell transient correction: neighbor items ordered by contribution,
/// their center offsets, and the shared contribution-weighted color.
struct CellCorrection {
  std::vector<std::uint32_t> item_indices;  // into the frame work-item list
  std::vector<std::uint64_t> gaussian_ids;  // parallel, stable ids
  std::vector<Vec2> offsets;       // corrected center - projected center
  std::vector<double> weights;     // Eq-7 color weights, sum to 1
  std::vector<Vec2> corrected_centers;  // cached at build time, pixels
  Vec3 corrected_color = Vec3::Zero();  // cached convex combination
  int k_used = 0;
  int density_count = 0;  // Gaussian projections inside this cell
};

/// Transient per-frame correction overlay. Never touches the map; valid only
/// for the exact (map, pose, cam) it was built from.
struct CorrectionPlan {
  int image_width = 0;
  int image_height = 0;
  int grid_w = 0;
  int grid_h = 0;
  std::vector<CellCorrection> cells;  // row-major grid_w x grid_h
  double gamma = 0.0;                 // motion amplitude used for adaptive K
  SmoothingConfig cfg;

  const CellCorrection& cell_at(int px, int py) const {
    return cells[static_cast<std::size_t>(py / cfg.grid) * grid_w +
                 px / cfg.grid];
  }
  double mean_k() const;
};

/// Indices of the k items with the largest decay at eval_point (contribution
/// metric), ties broken by smaller depth then smaller id. Fewer than k are
/// returned when fewer candidates exist.
std::vector<std::uint32_t> select_neighbors(
    std::span<const SplatWorkItem> items, const GaussianMap& map,
    const Vec2& eval_point, int k,
    NeighborMetric metric = NeighborMetric::kContribution);

/// Arithmetic mean of the neighbors' projected centers (Eq-5 form).
/// Throws EmptyNeighborhood.
Vec2 centroid(std::span<const SplatWorkItem> items,
              std::span<const std::uint32_t> neighbor_indices);

/// Shifts center toward the centroid by an alpha-length step, clamped so the
/// result never overshoots the centroid.
Vec2 correct_position(const Vec2& center, const Vec2& centroid,
                      const SmoothingConfig& cfg);

struct ColorCorrection {
  Vec3 color = Vec3::Zero();
  std::vector<double> weights;
};

/// Contribution-weighted color average; falls back to the unweighted mean
/// when the total contribution is below epsilon.
ColorCorrection correct_color(std::span<const double> decays,
                              std::span<const Vec3> colors,
                              double epsilon = 1e-6);

/// Adaptive neighbor count from local density and motion amplitude:
/// K = round(k0 * max(0.5, 1 - beta * gamma / (rho + eps))), clamped to
/// [2, k0]. cfg.fixed_k overrides.
int adaptive_k(int density_count, double motion_gamma,
               const SmoothingConfig& cfg);

/// Normalized motion amplitude between two poses, in [0,1].
double motion_gamma(const Pose& a, const Pose& b, const SmoothingConfig& cfg);

/// Builds the full correction overlay for one frame: per grid cell, density,
/// adaptive K, neighbor selection at the cell center, corrected centers and
/// colors. The map is read-only throughout.
CorrectionPlan build_plan(const GaussianMap& map, const Pose& pose,
                          const PinholeCamera& cam, const SmoothingConfig& cfg,
                          double gamma);

}  // namespace splatslam

#endif  // SPLATSLAM_CBKNN_HPP
