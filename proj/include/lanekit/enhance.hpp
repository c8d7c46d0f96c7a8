#pragma once

#include "lanekit/image.hpp"

namespace lanekit {

enum class ExposureFlag { Under, Over, Normal };

// Result of the luminance-histogram diagnosis of one image.
struct ExposureReport {
    double mean_luminance = 0.0;        // [0, 1]
    double underexposed_fraction = 0.0; // pixels in the lowest 5% of range
    double overexposed_fraction = 0.0;  // pixels in the highest 5% of range
    ExposureFlag flag = ExposureFlag::Normal;
};

struct EnhanceConfig {
    int clahe_tiles = 8;          // grid count per axis
    double clahe_clip = 2.0;      // multiples of the uniform bin height; >= 256 disables clipping
    int guided_radius = 8;        // box window radius in pixels
    double guided_epsilon = 1e-3; // variance regularizer
    double gamma_target = 0.5;    // target mean luminance
    double under_thresh = 0.35;
    double over_thresh = 0.65;

    void validate() const;
};

ExposureReport analyze_histogram(const ImageU8& img);

// Power-law brightness normalization toward cfg.gamma_target. Identity when
// the report flags Normal exposure; otherwise v -> 255*(v/255)^gamma with
// gamma = ln(target)/ln(max(mean, 1/255)), applied per channel.
ImageU8 adaptive_gamma(const ImageU8& img, const ExposureReport& report,
                       const EnhanceConfig& cfg);

// Contrast-limited adaptive histogram equalization. Color images are
// equalized on the luma channel with chroma rescaled proportionally.
ImageU8 clahe(const ImageU8& img, const EnhanceConfig& cfg);

// Classic guided filter with box windows of radius cfg.guided_radius and
// edge-replication padding; computed on normalized [0,1] values and
// re-quantized with round half up.
ImageU8 guided_filter(const ImageU8& input, const ImageU8& guide,
                      const EnhanceConfig& cfg);

// Full two-stage pipeline: histogram analysis -> adaptive gamma ->
// CLAHE -> guided filter, with the gamma output as the filter guide.
ImageU8 enhance(const ImageU8& img, const EnhanceConfig& cfg);

} // namespace lanekit
