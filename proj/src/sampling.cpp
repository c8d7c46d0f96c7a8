#include "lanekit/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace lanekit {

void SampleConfig::validate() const {
    if (n_sample < 2)
        throw ConfigError("sampling: n_sample must be >= 2");
    if (image_height < 1)
        throw ConfigError("sampling: image_height must be >= 1");
    if (beta <= 1.0)
        throw ConfigError("sampling: beta must be > 1");
}

std::vector<double> arithmetic_sequence(const SampleConfig& cfg) {
    cfg.validate();
    std::vector<double> a(cfg.n_sample);
    for (int i = 0; i < cfg.n_sample; ++i)
        a[i] = static_cast<double>(i) / (cfg.n_sample - 1);
    return a;
}

namespace {

int round_row(double v) { return static_cast<int>(std::floor(v + 0.5)); }

std::vector<int> dedup_sorted(std::vector<int> rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

} // namespace

std::vector<int> attention_rows(const SampleConfig& cfg) {
    std::vector<double> a = arithmetic_sequence(cfg);
    const double log_beta = std::log(cfg.beta);
    std::vector<int> rows(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double warped = std::log1p((cfg.beta - 1.0) * a[i]) / log_beta;
        rows[i] = round_row(cfg.image_height * warped);
    }
    return dedup_sorted(std::move(rows));
}

std::vector<int> uniform_rows(const SampleConfig& cfg) {
    std::vector<double> a = arithmetic_sequence(cfg);
    std::vector<int> rows(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        rows[i] = round_row(cfg.image_height * a[i]);
    return dedup_sorted(std::move(rows));
}

std::vector<Point> prior_to_points(const LanePrior& p, const std::vector<int>& rows,
                                   int image_height) {
    std::vector<double> xs = prior_to_grid(p, rows, image_height);
    std::vector<Point> pts;
    pts.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (xs[i] != kInvalidX)
            pts.push_back({xs[i], static_cast<double>(rows[i])});
    }
    return pts;
}

} // namespace lanekit
