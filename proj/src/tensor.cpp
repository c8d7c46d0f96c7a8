#include "lanekit/tensor.hpp"

#include <cmath>

namespace lanekit {

void FeatureMap::validate() const {
    if (channels < 0 || height < 0 || width < 0)
        throw ValidationError("FeatureMap: negative dimension");
    if (data.size() != static_cast<std::size_t>(channels) * height * width)
        throw ValidationError("FeatureMap: data length != channels*height*width");
    for (float v : data) {
        if (!std::isfinite(v))
            throw ValidationError("FeatureMap: non-finite value");
    }
}

} // namespace lanekit
