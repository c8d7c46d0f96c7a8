#include "lanekit/image.hpp"

#include <cmath>

namespace lanekit {

double pixel_luminance(const ImageU8& img, int y, int x) {
    if (img.channels == 1)
        return img.at(y, x) / 255.0;
    return (0.299 * img.at(y, x, 0) + 0.587 * img.at(y, x, 1) +
            0.114 * img.at(y, x, 2)) / 255.0;
}

std::uint8_t pixel_luminance_u8(const ImageU8& img, int y, int x) {
    if (img.channels == 1)
        return img.at(y, x);
    return quantize_u8(0.299 * img.at(y, x, 0) + 0.587 * img.at(y, x, 1) +
                       0.114 * img.at(y, x, 2));
}

std::uint8_t quantize_u8(double v) {
    double r = std::floor(v + 0.5);
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<std::uint8_t>(r);
}

} // namespace lanekit
