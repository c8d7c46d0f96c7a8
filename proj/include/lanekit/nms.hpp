#pragma once

#include <vector>

#include "lanekit/lane.hpp"

namespace lanekit {

struct InferenceConfig {
    double score_threshold = 0.4;
    double nms_iou_threshold = 0.5;
    int max_lanes = 4;
    bool nms_free = false;

    void validate() const;
};

// Keeps predictions with score >= threshold, order preserved.
std::vector<LanePrior> filter_by_score(const std::vector<LanePrior>& preds,
                                       const InferenceConfig& cfg);

// Greedy NMS: best score first (ties to the lower original index), suppress
// anything whose clamped-to-[0,1] Line IoU with a kept lane exceeds the
// threshold, stop at max_lanes. Lanes with no common valid rows never
// suppress each other.
std::vector<LanePrior> nms(const std::vector<LanePrior>& preds,
                           const InferenceConfig& cfg, double e);

// Score filter, then NMS unless cfg.nms_free.
std::vector<LanePrior> infer(const std::vector<LanePrior>& preds,
                             const InferenceConfig& cfg, double e);

} // namespace lanekit
