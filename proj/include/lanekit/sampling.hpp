#pragma once

#include <vector>

#include "lanekit/lane.hpp"

namespace lanekit {

enum class SampleMode { Uniform, Attention };

struct SampleConfig {
    int n_sample = 36;      // number of sample points
    int image_height = 320; // H; row grids span [0, H] inclusive
    double beta = 10.0;     // log-warp base, > 1
    SampleMode mode = SampleMode::Attention;

    void validate() const;
};

// a_i = i/(n_sample-1) for i = 0..n_sample-1.
std::vector<double> arithmetic_sequence(const SampleConfig& cfg);

// Non-uniform rows from the concave warp
//   w(a) = ln(1 + (beta-1)*a) / ln(beta),
// rounded, sorted ascending and deduplicated. Endpoints are exactly 0 and H.
// The warp compresses spacing toward the high-row end of the range.
std::vector<int> attention_rows(const SampleConfig& cfg);

// Evenly spaced rows round(H * a_i), endpoints 0 and H.
std::vector<int> uniform_rows(const SampleConfig& cfg);

// Materializes a prior on the requested rows (sorted ascending, within
// [0, image_height]); rows where the prior is invalid are skipped.
std::vector<Point> prior_to_points(const LanePrior& p, const std::vector<int>& rows,
                                   int image_height);

} // namespace lanekit
