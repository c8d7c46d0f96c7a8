#include "lanekit/assign.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lanekit {

void CostWeights::validate() const {
    if (w_sim < 0.0 || w_cls < 0.0)
        throw ConfigError("cost weights must be >= 0");
    if (w_sim == 0.0 && w_cls == 0.0)
        throw ConfigError("cost weights must not both be zero");
}

void LossWeights::validate() const {
    if (w_cls < 0.0 || w_xytl < 0.0 || w_liou < 0.0)
        throw ConfigError("loss weights must be >= 0");
    if (focal_alpha <= 0.0 || focal_alpha >= 1.0)
        throw ConfigError("focal_alpha must lie in (0, 1)");
    if (focal_gamma < 0.0)
        throw ConfigError("focal_gamma must be >= 0");
    if (liou_radius_e <= 0.0)
        throw ConfigError("liou_radius_e must be > 0");
}

double line_iou(const std::vector<double>& xs_a, const std::vector<double>& xs_b,
                double e) {
    if (xs_a.size() != xs_b.size())
        throw ConfigError("line_iou: grids differ in length");
    double inter_sum = 0.0, union_sum = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < xs_a.size(); ++i) {
        if (xs_a[i] == kInvalidX || xs_b[i] == kInvalidX)
            continue;
        any = true;
        double d = std::abs(xs_a[i] - xs_b[i]);
        inter_sum += 2.0 * e - d;
        union_sum += 2.0 * e + d;
    }
    if (!any)
        throw UndefinedOverlap("line_iou: no common valid rows");
    return inter_sum / union_sum;
}

double line_iou(const LanePrior& a, const LanePrior& b, double e) {
    return line_iou(a.xs, b.xs, e);
}

double line_iou(const LanePrior& pred, const GtLane& gt, const GridSpec& grid,
                double e) {
    return line_iou(prior_to_grid(pred, grid.rows, grid.image_height),
                    resample_gt(gt, grid.rows), e);
}

namespace {

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

constexpr double kScoreEps = 1e-7;

} // namespace

CostComponents sim_cost(const LanePrior& pred, const GtLane& gt, const GridSpec& grid) {
    if (grid.image_height < 1 || grid.image_width < 1)
        throw ConfigError("sim_cost: grid needs image dims");

    CostComponents c;
    std::vector<double> px = prior_to_grid(pred, grid.rows, grid.image_height);
    std::vector<double> gx = resample_gt(gt, grid.rows);

    double dist_sum = 0.0;
    int common = 0;
    for (std::size_t i = 0; i < px.size(); ++i) {
        if (px[i] == kInvalidX || gx[i] == kInvalidX)
            continue;
        dist_sum += std::abs(px[i] - gx[i]);
        ++common;
    }
    if (common == 0) {
        c.c_dis = 1.0;
        c.no_overlap = true;
    } else {
        c.c_dis = clamp01(dist_sum / common / grid.image_width);
    }

    GtGeometry gg = gt_geometry(gt);
    double diag = std::hypot(static_cast<double>(grid.image_width),
                             static_cast<double>(grid.image_height));
    c.c_xy = clamp01(std::hypot(pred.start_x - gg.start_x, pred.start_y - gg.start_y) / diag);
    c.c_theta = clamp01(std::abs(pred.theta - gg.theta) / std::numbers::pi);

    double prod = c.c_dis * c.c_xy * c.c_theta;
    c.c_sim = prod * prod;
    return c;
}

double focal_cost(double score, bool is_positive_target, const LossWeights& lw) {
    double p = std::clamp(score, kScoreEps, 1.0 - kScoreEps);
    if (is_positive_target)
        return -lw.focal_alpha * std::pow(1.0 - p, lw.focal_gamma) * std::log(p);
    return -(1.0 - lw.focal_alpha) * std::pow(p, lw.focal_gamma) * std::log(1.0 - p);
}

CostMatrix assignment_cost(const std::vector<LanePrior>& preds,
                           const std::vector<GtLane>& gts,
                           const CostWeights& cw, const LossWeights& lw,
                           const GridSpec& grid) {
    cw.validate();
    lw.validate();
    if (preds.empty() || gts.empty())
        throw ConfigError("assignment_cost: needs at least one pred and one gt");

    // Largest attainable positive focal cost, used to normalize the stored
    // c_cls component into [0, 1].
    const double focal_max = focal_cost(0.0, true, lw);

    CostMatrix cm;
    cm.n_pred = static_cast<int>(preds.size());
    cm.n_gt = static_cast<int>(gts.size());
    cm.values.resize(static_cast<std::size_t>(cm.n_pred) * cm.n_gt);
    cm.components.resize(cm.values.size());

    for (int p = 0; p < cm.n_pred; ++p) {
        double fc = focal_cost(preds[p].score, true, lw);
        for (int g = 0; g < cm.n_gt; ++g) {
            CostComponents c = sim_cost(preds[p], gts[g], grid);
            c.c_cls = clamp01(focal_max > 0.0 ? fc / focal_max : 0.0);
            std::size_t idx = static_cast<std::size_t>(p) * cm.n_gt + g;
            cm.components[idx] = c;
            cm.values[idx] = cw.w_sim * c.c_sim + cw.w_cls * fc;
        }
    }
    return cm;
}

std::vector<double> liou_matrix(const std::vector<LanePrior>& preds,
                                const std::vector<GtLane>& gts,
                                const GridSpec& grid, double e) {
    std::vector<double> m(preds.size() * gts.size(), -1.0);
    std::vector<std::vector<double>> gt_grids;
    gt_grids.reserve(gts.size());
    for (const GtLane& gt : gts)
        gt_grids.push_back(resample_gt(gt, grid.rows));

    for (std::size_t p = 0; p < preds.size(); ++p) {
        std::vector<double> px = prior_to_grid(preds[p], grid.rows, grid.image_height);
        for (std::size_t g = 0; g < gts.size(); ++g) {
            try {
                m[p * gts.size() + g] = line_iou(px, gt_grids[g], e);
            } catch (const UndefinedOverlap&) {
                // stays at -1: no overlap at all
            }
        }
    }
    return m;
}

std::vector<std::vector<int>> dynamic_topk_assign(const CostMatrix& cm,
                                                  const std::vector<double>& liou,
                                                  int k_cap) {
    const int n_pred = cm.n_pred;
    const int n_gt = cm.n_gt;
    if (n_pred < 1 || n_gt < 1)
        throw ConfigError("dynamic_topk_assign: empty cost matrix");
    if (liou.size() != cm.values.size())
        throw ConfigError("dynamic_topk_assign: liou matrix shape mismatch");
    if (k_cap < 1)
        throw ConfigError("dynamic_topk_assign: k_cap must be >= 1");

    // Per-gt budget k_g from the summed top positive LIoU values.
    std::vector<int> k(n_gt, 1);
    for (int g = 0; g < n_gt; ++g) {
        std::vector<double> col;
        for (int p = 0; p < n_pred; ++p) {
            double v = liou[static_cast<std::size_t>(p) * n_gt + g];
            if (v > 0.0)
                col.push_back(v);
        }
        std::sort(col.begin(), col.end(), std::greater<>());
        int take = std::min<int>(std::min(k_cap, n_pred), static_cast<int>(col.size()));
        double s = 0.0;
        for (int i = 0; i < take; ++i)
            s += col[i];
        k[g] = std::clamp(static_cast<int>(std::floor(s)), 1, k_cap);
    }

    // Candidate set per gt: its k_g lowest-cost predictions.
    std::vector<std::vector<int>> candidates(n_gt);
    for (int g = 0; g < n_gt; ++g) {
        std::vector<int> order(n_pred);
        for (int p = 0; p < n_pred; ++p)
            order[p] = p;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return cm.at(a, g) < cm.at(b, g);
        });
        order.resize(std::min(k[g], n_pred));
        candidates[g] = std::move(order);
    }

    // Conflict resolution: a prediction wanted by several gts goes to the
    // one with the lower cost, ties to the lower gt index.
    std::vector<int> owner(n_pred, -1);
    for (int g = 0; g < n_gt; ++g) {
        for (int p : candidates[g]) {
            if (owner[p] < 0) {
                owner[p] = g;
            } else {
                int og = owner[p];
                if (cm.at(p, g) < cm.at(p, og))
                    owner[p] = g;
            }
        }
    }

    std::vector<std::vector<int>> assignment(n_gt);
    for (int g = 0; g < n_gt; ++g) {
        for (int p : candidates[g])
            if (owner[p] == g)
                assignment[g].push_back(p);
    }

    // Refill gts that lost everything: cheapest free prediction first; when
    // none is free, steal the cheapest from a gt that holds several.
    for (int g = 0; g < n_gt; ++g) {
        if (!assignment[g].empty())
            continue;
        int best = -1;
        bool best_free = false;
        for (int p = 0; p < n_pred; ++p) {
            bool free = owner[p] < 0;
            bool stealable = !free && assignment[owner[p]].size() > 1;
            if (!free && !stealable)
                continue;
            if (best < 0 || (free && !best_free) ||
                (free == best_free && cm.at(p, g) < cm.at(best, g))) {
                best = p;
                best_free = free;
            }
        }
        if (best < 0)
            continue; // n_pred < n_gt and nothing left
        if (owner[best] >= 0) {
            auto& donor = assignment[owner[best]];
            donor.erase(std::find(donor.begin(), donor.end(), best));
        }
        owner[best] = g;
        assignment[g].push_back(best);
    }
    return assignment;
}

} // namespace lanekit
