#pragma once

#include <iosfwd>
#include <string>

#include "lanekit/tensor.hpp"

namespace lanekit {

// Binary tensor container: magic "WFPN", then C, H, W as little-endian
// uint32, then C*H*W little-endian float32 values. NaN payloads are
// rejected on read.

FeatureMap read_tensor(const std::string& path);
void write_tensor(const FeatureMap& t, const std::string& path);

// Stream variants; several records may be concatenated in one file.
FeatureMap read_tensor_record(std::istream& in);
void write_tensor_record(const FeatureMap& t, std::ostream& out);

} // namespace lanekit
