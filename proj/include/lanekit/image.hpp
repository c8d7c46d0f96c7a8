#pragma once

#include <cstdint>
#include <vector>

#include "lanekit/errors.hpp"

namespace lanekit {

// 8-bit raster image, row-major, interleaved channels (1 = gray, 3 = RGB).
struct ImageU8 {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;

    ImageU8() = default;

    ImageU8(int h, int w, int c, std::vector<std::uint8_t> d)
        : height(h), width(w), channels(c), data(std::move(d)) {
        validate();
    }

    // Zero-filled image.
    ImageU8(int h, int w, int c)
        : height(h), width(w), channels(c),
          data(static_cast<std::size_t>(h) * w * c, 0) {
        validate();
    }

    std::uint8_t& at(int y, int x, int c = 0) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int y, int x, int c = 0) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(height) * width;
    }

    bool same_dims(const ImageU8& other) const {
        return height == other.height && width == other.width &&
               channels == other.channels;
    }

private:
    void validate() const {
        if (height < 1 || width < 1)
            throw ValidationError("ImageU8: height and width must be >= 1");
        if (channels != 1 && channels != 3)
            throw ValidationError("ImageU8: channels must be 1 or 3");
        if (data.size() != static_cast<std::size_t>(height) * width * channels)
            throw ValidationError("ImageU8: data length != height*width*channels");
    }
};

// Rec.601 luma of one pixel as a fraction of full scale, in [0, 1].
double pixel_luminance(const ImageU8& img, int y, int x);

// Luma of one pixel as a byte value in [0, 255] (round half up).
std::uint8_t pixel_luminance_u8(const ImageU8& img, int y, int x);

// Round half up and clamp to [0, 255].
std::uint8_t quantize_u8(double v);

} // namespace lanekit
