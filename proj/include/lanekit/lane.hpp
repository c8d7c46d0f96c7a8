#pragma once

#include <vector>

#include "lanekit/errors.hpp"

namespace lanekit {

// CULane missing-point convention: an x of -2 marks an invalid sample.
inline constexpr double kInvalidX = -2.0;

// Default number of per-row points carried by a lane prior.
inline constexpr int kPriorPoints = 72;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Ground-truth lane as an ordered polyline in image coordinates.
struct GtLane {
    std::vector<Point> points;
};

// Parametric lane hypothesis: start point, direction, length, and per-row
// x-coordinates on the native N-row grid spanning [0, image_height].
// theta is measured from the image x-axis with the lane running upward
// (toward smaller y), so theta lies in (0, pi) for any real lane.
struct LanePrior {
    double start_x = 0.0;
    double start_y = 0.0;
    double theta = 0.0;
    double length = 0.0;
    std::vector<double> xs;   // size kPriorPoints unless stated otherwise
    double score = 0.0;       // classification confidence in [0, 1]

    LanePrior() : xs(kPriorPoints, kInvalidX) {}
};

// Start point (bottom-most vertex), direction and arc length of a
// ground-truth polyline, matching the LanePrior parameter conventions.
struct GtGeometry {
    double start_x = 0.0;
    double start_y = 0.0;
    double theta = 0.0;
    double arc_length = 0.0;
};

GtGeometry gt_geometry(const GtLane& gt);

// x-coordinate of the polyline at each requested row (linear interpolation
// along y), kInvalidX where the row is outside the lane's vertical span.
// Sentinel points of the polyline are ignored.
std::vector<double> resample_gt(const GtLane& gt, const std::vector<int>& rows);

// x-coordinate of the prior at each requested row: linear interpolation of
// its native grid, kInvalidX outside the prior's span (more than
// length*sin(theta) rows above start_y, or below it) or where a needed grid
// entry is the sentinel.
std::vector<double> prior_to_grid(const LanePrior& p, const std::vector<int>& rows,
                                  int image_height);

} // namespace lanekit
