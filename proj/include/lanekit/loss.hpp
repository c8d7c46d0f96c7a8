#pragma once

#include <vector>

#include "lanekit/assign.hpp"

namespace lanekit {

struct LossBreakdown {
    double total = 0.0;
    double l_cls = 0.0;  // focal loss, mean over all predictions
    double l_xytl = 0.0; // smooth-L1 on (x, y, theta, length), positives only
    double l_liou = 0.0; // mean(1 - LIoU) over positives
};

// Smooth-L1 with transition point 1: 0.5 r^2 for |r| < 1, |r| - 0.5 beyond.
double smooth_l1(double r);

// Training loss on one image worth of predictions.
// assignment[g] lists the prediction indices positive for gt g; predictions
// not assigned anywhere are negatives. Start-point residuals are normalized
// by image dims, theta by pi, length by image height.
LossBreakdown total_loss(const std::vector<LanePrior>& preds,
                         const std::vector<GtLane>& gts,
                         const std::vector<std::vector<int>>& assignment,
                         const LossWeights& lw, const GridSpec& grid);

} // namespace lanekit
