#include "lanekit/tensor_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace lanekit {

namespace {

constexpr char kMagic[4] = {'W', 'F', 'P', 'N'};

static_assert(std::endian::native == std::endian::little,
              "tensor io assumes a little-endian host");

std::uint32_t read_u32(std::istream& in) {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), 4);
    if (!in)
        throw TruncationError("tensor: truncated header");
    return v;
}

} // namespace

FeatureMap read_tensor_record(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in)
        throw TruncationError("tensor: missing magic");
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw FormatError("tensor: bad magic, expected WFPN");

    std::uint32_t c = read_u32(in);
    std::uint32_t h = read_u32(in);
    std::uint32_t w = read_u32(in);
    std::size_t count = static_cast<std::size_t>(c) * h * w;
    if (count > (1u << 28))
        throw FormatError("tensor: implausible dims " + std::to_string(c) + "x" +
                          std::to_string(h) + "x" + std::to_string(w));

    std::vector<float> data(count);
    in.read(reinterpret_cast<char*>(data.data()),
            static_cast<std::streamsize>(count * sizeof(float)));
    if (!in)
        throw TruncationError("tensor: payload shorter than " +
                              std::to_string(count) + " floats");
    for (float v : data) {
        if (std::isnan(v))
            throw ValidationError("tensor: NaN in payload");
    }
    return FeatureMap(static_cast<int>(c), static_cast<int>(h), static_cast<int>(w),
                      std::move(data));
}

void write_tensor_record(const FeatureMap& t, std::ostream& out) {
    out.write(kMagic, 4);
    std::uint32_t dims[3] = {static_cast<std::uint32_t>(t.channels),
                             static_cast<std::uint32_t>(t.height),
                             static_cast<std::uint32_t>(t.width)};
    out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
    out.write(reinterpret_cast<const char*>(t.data.data()),
              static_cast<std::streamsize>(t.data.size() * sizeof(float)));
}

FeatureMap read_tensor(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path);
    return read_tensor_record(f);
}

void write_tensor(const FeatureMap& t, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    write_tensor_record(t, f);
    if (!f)
        throw IoError("write failed on " + path);
}

} // namespace lanekit
