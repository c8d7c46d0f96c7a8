#pragma once

#include "lanekit/tensor.hpp"

namespace lanekit {

// One level of the 2-D orthonormal Haar decomposition. Each subband is
// C x ceil(H/2) x ceil(W/2); odd inputs are replicate-padded and the
// original dims kept so the inverse can crop back.
struct Subbands {
    FeatureMap ll; // structural / low-frequency content
    FeatureMap lh; // horizontal detail
    FeatureMap hl; // vertical detail
    FeatureMap hh; // diagonal detail
    int orig_height = 0;
    int orig_width = 0;
};

// Per 2x2 block [a b; c d]:
//   ll = (a+b+c+d)/2, lh = (a-b+c-d)/2, hl = (a+b-c-d)/2, hh = (a-b-c+d)/2
// which is orthonormal: for even dims, energy is preserved exactly.
Subbands dwt2(const FeatureMap& x);

// Exact inverse of dwt2 up to float rounding.
FeatureMap idwt2(const Subbands& s);

} // namespace lanekit
