#include "lanekit/pnm.hpp"

#include <fstream>
#include <sstream>

namespace lanekit {

namespace {

// Skips whitespace and '#' comments; returns the offset of the next token
// byte or npos at end of input.
std::size_t skip_separators(const std::string& bytes, std::size_t pos) {
    while (pos < bytes.size()) {
        char c = bytes[pos];
        if (c == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++pos;
        } else {
            break;
        }
    }
    return pos < bytes.size() ? pos : std::string::npos;
}

// Parses one unsigned decimal header field starting at pos.
long parse_field(const std::string& bytes, std::size_t& pos, const char* what) {
    pos = skip_separators(bytes, pos);
    if (pos == std::string::npos)
        throw ParseError(std::string("pnm: missing ") + what + " field");
    if (bytes[pos] < '0' || bytes[pos] > '9')
        throw ParseError(std::string("pnm: bad ") + what + " at byte offset " +
                         std::to_string(pos));
    long value = 0;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
        value = value * 10 + (bytes[pos] - '0');
        if (value > 1000000000L)
            throw ParseError(std::string("pnm: ") + what + " out of range at byte offset " +
                             std::to_string(pos));
        ++pos;
    }
    return value;
}

} // namespace

ImageU8 decode_pnm(const std::string& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
        throw ParseError("pnm: not a P5/P6 file (byte offset 0)");
    int channels = bytes[1] == '5' ? 1 : 3;

    std::size_t pos = 2;
    long width = parse_field(bytes, pos, "width");
    long height = parse_field(bytes, pos, "height");
    long maxval = parse_field(bytes, pos, "maxval");
    if (width < 1 || height < 1)
        throw ParseError("pnm: dimensions must be positive");
    if (maxval != 255)
        throw ParseError("pnm: unsupported maxval " + std::to_string(maxval) +
                         " (only 255)");
    if (pos >= bytes.size())
        throw TruncationError("pnm: header not followed by payload");
    char sep = bytes[pos];
    if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n')
        throw ParseError("pnm: expected single whitespace after maxval at byte offset " +
                         std::to_string(pos));
    ++pos;

    std::size_t need = static_cast<std::size_t>(width) * height * channels;
    if (bytes.size() - pos < need)
        throw TruncationError("pnm: payload has " + std::to_string(bytes.size() - pos) +
                              " bytes, expected " + std::to_string(need));

    std::vector<std::uint8_t> data(need);
    for (std::size_t i = 0; i < need; ++i)
        data[i] = static_cast<std::uint8_t>(bytes[pos + i]);
    return ImageU8(static_cast<int>(height), static_cast<int>(width), channels,
                   std::move(data));
}

std::string encode_pnm(const ImageU8& img) {
    if (img.channels != 1 && img.channels != 3)
        throw ValidationError("pnm: channels must be 1 or 3");
    std::ostringstream out;
    out << (img.channels == 1 ? "P5" : "P6") << '\n'
        << img.width << ' ' << img.height << '\n'
        << "255\n";
    std::string s = out.str();
    s.append(reinterpret_cast<const char*>(img.data.data()), img.data.size());
    return s;
}

ImageU8 read_image(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return decode_pnm(buf.str());
}

void write_image(const ImageU8& img, const std::string& path) {
    std::string bytes = encode_pnm(img);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f)
        throw IoError("write failed on " + path);
}

} // namespace lanekit
