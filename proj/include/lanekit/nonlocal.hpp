#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lanekit/tensor.hpp"

namespace lanekit {

// Parameters of the non-local block and the post-fusion refinement conv.
// theta/phi/g project C channels to c_embed; out projects back. refine is a
// 3x3 conv over C channels. Generated pseudo-randomly (make_weights) or
// loaded from a file; never trained here.
struct BlockWeights {
    int channels = 0;
    int embed_channels = 0;
    std::vector<float> theta_w; // c_embed x C, row-major
    std::vector<float> phi_w;   // c_embed x C
    std::vector<float> g_w;     // c_embed x C
    std::vector<float> out_w;   // C x c_embed
    std::vector<float> refine_w; // C x C x 3 x 3
    std::vector<float> refine_b; // C
    std::uint64_t seed = 0;

    void validate() const;

    // refine kernel = center-tap identity, zero bias; projections untouched.
    void set_identity_refine();
};

struct FusionConfig {
    double alpha = 0.7; // weight of the wavelet-enhanced branch, in [0, 1]
};

// Embedded-Gaussian non-local block with residual connection:
// A = rowsoftmax((theta x)^T (phi x) / sqrt(c_embed)); y = out (g x A^T);
// returns x + y.
FeatureMap nonlocal_block(const FeatureMap& x, const BlockWeights& w);

// The row-softmaxed N x N affinity matrix (N = H*W), for inspection.
std::vector<double> nonlocal_attention(const FeatureMap& x, const BlockWeights& w);

// DWT -> non-local on the LL subband only -> inverse DWT. High-frequency
// subbands pass through unchanged.
FeatureMap wavelet_nonlocal(const FeatureMap& x, const BlockWeights& w);

// z = alpha*we_branch + (1-alpha)*fpn_branch, then a 3x3 refinement conv
// (stride 1, replicate border) with w.refine_w / w.refine_b.
FeatureMap fuse(const FeatureMap& fpn_branch, const FeatureMap& we_branch,
                const FusionConfig& cfg, const BlockWeights& w);

// Deterministic pseudo-random weights: xorshift64* uniform(-s, s) with
// s = 1/sqrt(c). Identical seeds give bitwise-identical weights.
BlockWeights make_weights(int c, int c_embed, std::uint64_t seed);

// Serialized as six concatenated tensor records:
// theta (1,c_embed,C), phi (1,c_embed,C), g (1,c_embed,C), out (1,C,c_embed),
// refine (C,C,9), bias (1,1,C).
BlockWeights read_weights(const std::string& path);
void write_weights(const BlockWeights& w, const std::string& path);

} // namespace lanekit
