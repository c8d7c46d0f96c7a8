#pragma once

#include <string>

#include "lanekit/image.hpp"

namespace lanekit {

// Binary PGM (P5, 1 channel) / PPM (P6, 3 channels), maxval 255 only.
// The header accepts '#' comments and arbitrary whitespace; the writer
// emits the canonical "P5\n<w> <h>\n255\n" form, so write(read(f)) is
// byte-identical for canonically written files.

ImageU8 read_image(const std::string& path);
void write_image(const ImageU8& img, const std::string& path);

// In-memory variants used by the file API and by tests.
ImageU8 decode_pnm(const std::string& bytes);
std::string encode_pnm(const ImageU8& img);

} // namespace lanekit
