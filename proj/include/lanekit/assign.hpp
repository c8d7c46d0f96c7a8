#pragma once

#include <vector>

#include "lanekit/lane.hpp"

namespace lanekit {

struct CostWeights {
    double w_sim = 1.0;
    double w_cls = 1.0;

    void validate() const;
};

struct LossWeights {
    double w_cls = 2.0;
    double w_xytl = 0.2;
    double w_liou = 2.0;
    double focal_alpha = 0.25;
    double focal_gamma = 2.0;
    double liou_radius_e = 15.0; // Line-IoU extension radius in pixels

    void validate() const;
};

// Per-pair cost components, each normalized to [0, 1].
struct CostComponents {
    double c_dis = 0.0;   // mean per-row pixel distance / image width
    double c_xy = 0.0;    // start-point distance / image diagonal
    double c_theta = 0.0; // |delta theta| / pi
    double c_cls = 0.0;   // focal cost / max attainable focal cost
    double c_sim = 0.0;   // (c_dis * c_xy * c_theta)^2
    bool no_overlap = false; // no common valid row; c_dis forced to 1
};

struct CostMatrix {
    int n_pred = 0;
    int n_gt = 0;
    std::vector<double> values;            // n_pred x n_gt, row-major
    std::vector<CostComponents> components;

    double at(int p, int g) const { return values[static_cast<std::size_t>(p) * n_gt + g]; }
    const CostComponents& comp(int p, int g) const {
        return components[static_cast<std::size_t>(p) * n_gt + g];
    }
};

// Geometry context shared by the cost and loss evaluators: the common row
// grid lanes are materialized on, and the image dims used as normalizers.
struct GridSpec {
    std::vector<int> rows;
    int image_height = 0;
    int image_width = 0;
};

// Line IoU over rows where both lanes are valid: per row,
// inter = 2e - |xa-xb| (may be negative), union = 2e + |xa-xb|;
// LIoU = sum(inter)/sum(union), in [-1, 1], 1 iff identical.
// Throws UndefinedOverlap when no common valid row exists.
double line_iou(const std::vector<double>& xs_a, const std::vector<double>& xs_b,
                double e);
double line_iou(const LanePrior& a, const LanePrior& b, double e);
double line_iou(const LanePrior& pred, const GtLane& gt, const GridSpec& grid,
                double e);

// Similarity cost components of one (pred, gt) pair on the grid.
CostComponents sim_cost(const LanePrior& pred, const GtLane& gt, const GridSpec& grid);

// Focal cost of one score against a positive or negative target, with the
// score epsilon-clamped to [1e-7, 1 - 1e-7].
double focal_cost(double score, bool is_positive_target, const LossWeights& lw);

// Assignment cost matrix: w_sim * c_sim + w_cls * focal(score, positive).
CostMatrix assignment_cost(const std::vector<LanePrior>& preds,
                           const std::vector<GtLane>& gts,
                           const CostWeights& cw, const LossWeights& lw,
                           const GridSpec& grid);

// Pairwise Line IoU of every (pred, gt) pair on the grid, n_pred x n_gt,
// row-major; pairs with no common valid row get -1.
std::vector<double> liou_matrix(const std::vector<LanePrior>& preds,
                                const std::vector<GtLane>& gts,
                                const GridSpec& grid, double e);

// Per ground truth g, k_g = clamp(floor(sum of the top min(k_cap, n_pred)
// positive LIoU values of column g), 1, k_cap) lowest-cost predictions are
// assigned. A prediction claimed by several gts goes to the one with lower
// cost (ties to the lower gt index); gts left empty are refilled from the
// cheapest available predictions, so every gt keeps at least one prediction
// whenever n_pred >= n_gt.
std::vector<std::vector<int>> dynamic_topk_assign(const CostMatrix& cm,
                                                  const std::vector<double>& liou,
                                                  int k_cap);

} // namespace lanekit
