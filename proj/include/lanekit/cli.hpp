#pragma once

#include <iosfwd>

namespace lanekit::cli {

// Entry point behind the lanekit executable. Returns 0 on success, 1 on
// usage errors, 2 on data errors. Diagnostics go to err, results to out or
// to files named by the arguments.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lanekit::cli
