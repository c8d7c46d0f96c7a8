#pragma once

#include <string>
#include <vector>

#include "lanekit/lane.hpp"

namespace lanekit {

enum class LaneKind { Ground, Prior };

// Text lane file: optional "H W" header line, then one lane per line.
// Ground-truth lines are whitespace-separated "x y" pairs. Prior lines add
// a "score theta length start_x start_y" prefix before the pairs, whose
// y values lie on the prior's native grid (i * H / (N-1)); pair counts make
// the two record kinds distinguishable (even vs odd token count).
struct LaneFile {
    int image_height = 0;  // 0 when the file has no header
    int image_width = 0;
    LaneKind kind = LaneKind::Ground;
    std::vector<GtLane> gts;
    std::vector<LanePrior> priors;

    std::size_t lane_count() const {
        return kind == LaneKind::Ground ? gts.size() : priors.size();
    }
};

// Auto-detects the record kind from the first data line.
LaneFile read_lanes(const std::string& path);
LaneFile read_lanes(const std::string& path, LaneKind kind);
void write_lanes(const LaneFile& lf, const std::string& path);

// In-memory variants.
LaneFile parse_lanes(const std::string& text);
LaneFile parse_lanes(const std::string& text, LaneKind kind);
std::string format_lanes(const LaneFile& lf);

} // namespace lanekit
