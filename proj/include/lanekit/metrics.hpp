#pragma once

#include <vector>

#include "lanekit/lane.hpp"
#include "lanekit/lane_io.hpp"

namespace lanekit {

// Counts and rates at one IoU threshold.
struct F1Slice {
    double tau = 0.0;
    long tp = 0;
    long fp = 0;
    long fn = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct EvalReport {
    std::vector<F1Slice> slices; // one per threshold
    double mf1 = 0.0;            // mean F1 over tau = 0.50..0.95 step 0.05
    // TuSimple-style fields.
    double accuracy = 0.0;
    double fp_rate = 0.0;
    double fn_rate = 0.0;
};

// The ten mF1 thresholds, 0.50 to 0.95 in 0.05 steps.
std::vector<double> mf1_thresholds();

// IoU of two polylines rasterized as strokes of the given width onto a
// boolean canvas (pixel centers at +0.5). Lanes need >= 2 valid points.
double lane_mask_iou(const std::vector<Point>& a, const std::vector<Point>& b,
                     double width_px, int canvas_height, int canvas_width);

// Greedy matching by descending mask IoU; a match requires IoU > tau.
F1Slice culane_f1(const LaneFile& preds, const LaneFile& gts, double tau,
                  double width_px = 30.0);

// F1 at every mF1 threshold plus their mean.
EvalReport mf1(const LaneFile& preds, const LaneFile& gts, double width_px = 30.0);

// Point-level accuracy on shared anchor rows (|dx| < 20 px), lane-level
// matching at >= 85% correct points; FP/FN are the unmatched fractions.
EvalReport tusimple_metrics(const LaneFile& preds, const LaneFile& gts);

// Pairwise-count aggregation across images: sums tp/fp/fn (or point counts)
// before computing rates, so totals do not depend on per-file order.
struct CulaneTotals {
    std::vector<F1Slice> slices;
    void add(const F1Slice& s);
    EvalReport report() const;
};

struct TusimpleTotals {
    long correct_points = 0;
    long gt_points = 0;
    long matched_preds = 0;
    long total_preds = 0;
    long matched_gts = 0;
    long total_gts = 0;
    void add(const LaneFile& preds, const LaneFile& gts);
    EvalReport report() const;
};

} // namespace lanekit
