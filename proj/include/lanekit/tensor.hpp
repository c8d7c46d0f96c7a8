#pragma once

#include <cstddef>
#include <vector>

#include "lanekit/errors.hpp"

namespace lanekit {

// Dense C x H x W real-valued tensor, row-major within each channel plane.
// All values are finite; construction rejects NaN/Inf.
struct FeatureMap {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<float> data;

    FeatureMap() = default;

    FeatureMap(int c, int h, int w, std::vector<float> d)
        : channels(c), height(h), width(w), data(std::move(d)) {
        validate();
    }

    // Zero-filled tensor.
    FeatureMap(int c, int h, int w)
        : channels(c), height(h), width(w),
          data(static_cast<std::size_t>(c) * h * w, 0.0f) {
        validate();
    }

    float& at(int c, int y, int x) {
        return data[(static_cast<std::size_t>(c) * height + y) * width + x];
    }
    float at(int c, int y, int x) const {
        return data[(static_cast<std::size_t>(c) * height + y) * width + x];
    }

    std::size_t size() const { return data.size(); }

    bool same_dims(const FeatureMap& other) const {
        return channels == other.channels && height == other.height &&
               width == other.width;
    }

    bool empty() const { return data.empty(); }

private:
    void validate() const;
};

} // namespace lanekit
