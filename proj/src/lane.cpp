#include "lanekit/lane.hpp"

#include <algorithm>
#include <cmath>

namespace lanekit {

namespace {

// Valid (non-sentinel) points of a polyline, sorted by ascending y.
// Lanes in this domain are y-monotone; a stable sort keeps any duplicate-y
// points in file order.
std::vector<Point> valid_points_by_y(const GtLane& gt) {
    std::vector<Point> pts;
    pts.reserve(gt.points.size());
    for (const Point& p : gt.points) {
        if (p.x != kInvalidX)
            pts.push_back(p);
    }
    std::stable_sort(pts.begin(), pts.end(),
                     [](const Point& a, const Point& b) { return a.y < b.y; });
    return pts;
}

} // namespace

GtGeometry gt_geometry(const GtLane& gt) {
    std::vector<Point> pts;
    for (const Point& p : gt.points) {
        if (p.x != kInvalidX)
            pts.push_back(p);
    }
    if (pts.size() < 2)
        throw ValidationError("gt lane needs at least 2 valid points");

    const Point* bottom = &pts[0];
    const Point* top = &pts[0];
    for (const Point& p : pts) {
        if (p.y > bottom->y) bottom = &p;
        if (p.y < top->y) top = &p;
    }

    GtGeometry g;
    g.start_x = bottom->x;
    g.start_y = bottom->y;
    // Direction of travel is bottom -> top (decreasing y); with image y
    // pointing down this lands theta in [0, pi].
    g.theta = std::atan2(bottom->y - top->y, top->x - bottom->x);

    double arc = 0.0;
    const Point* prev = nullptr;
    for (const Point& p : pts) {
        if (prev)
            arc += std::hypot(p.x - prev->x, p.y - prev->y);
        prev = &p;
    }
    g.arc_length = arc;
    return g;
}

std::vector<double> resample_gt(const GtLane& gt, const std::vector<int>& rows) {
    std::vector<double> out(rows.size(), kInvalidX);
    std::vector<Point> pts = valid_points_by_y(gt);
    if (pts.size() < 2)
        return out;

    for (std::size_t i = 0; i < rows.size(); ++i) {
        double r = rows[i];
        if (r < pts.front().y || r > pts.back().y)
            continue;
        // Bracketing segment; zero-height segments are crossed only when the
        // row sits exactly on them.
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            double y0 = pts[k].y, y1 = pts[k + 1].y;
            if (r < y0 || r > y1)
                continue;
            if (y1 == y0) {
                out[i] = pts[k].x;
            } else {
                double t = (r - y0) / (y1 - y0);
                out[i] = pts[k].x + t * (pts[k + 1].x - pts[k].x);
            }
            break;
        }
    }
    return out;
}

std::vector<double> prior_to_grid(const LanePrior& p, const std::vector<int>& rows,
                                  int image_height) {
    std::vector<double> out(rows.size(), kInvalidX);
    const int n = static_cast<int>(p.xs.size());
    if (n < 2 || image_height < 1)
        return out;

    // Vertical span covered by the prior: length pixels along the lane
    // project to length*sin(theta) rows above the start point.
    const double span = p.length * std::sin(p.theta);
    const double top_y = p.start_y - std::max(span, 0.0);
    constexpr double kRowSlack = 1e-9;

    for (std::size_t i = 0; i < rows.size(); ++i) {
        double r = rows[i];
        if (r < top_y - kRowSlack || r > p.start_y + kRowSlack)
            continue;
        double t = r * (n - 1) / static_cast<double>(image_height);
        if (t < 0.0 || t > n - 1)
            continue;
        int i0 = static_cast<int>(t);
        if (i0 > n - 2) i0 = n - 2;
        int i1 = i0 + 1;
        double frac = t - i0;
        if (p.xs[i0] == kInvalidX)
            continue;
        if (frac > 0.0 && p.xs[i1] == kInvalidX)
            continue;
        out[i] = p.xs[i0] + frac * (p.xs[i1] - p.xs[i0]);
    }
    return out;
}

} // namespace lanekit
