#include "lanekit/nonlocal.hpp"

#include <cmath>
#include <fstream>

#include "lanekit/tensor_io.hpp"
#include "lanekit/wavelet.hpp"

namespace lanekit {

void BlockWeights::validate() const {
    if (channels < 1 || embed_channels < 1)
        throw ConfigError("weights: channel counts must be >= 1");
    const std::size_t c = channels, ce = embed_channels;
    if (theta_w.size() != ce * c || phi_w.size() != ce * c || g_w.size() != ce * c)
        throw ConfigError("weights: projection matrix size mismatch");
    if (out_w.size() != c * ce)
        throw ConfigError("weights: output projection size mismatch");
    if (refine_w.size() != c * c * 9 || refine_b.size() != c)
        throw ConfigError("weights: refine kernel size mismatch");
    auto finite = [](const std::vector<float>& v) {
        for (float x : v)
            if (!std::isfinite(x)) return false;
        return true;
    };
    if (!finite(theta_w) || !finite(phi_w) || !finite(g_w) || !finite(out_w) ||
        !finite(refine_w) || !finite(refine_b))
        throw ConfigError("weights: non-finite value");
}

void BlockWeights::set_identity_refine() {
    const std::size_t c = channels;
    refine_w.assign(c * c * 9, 0.0f);
    refine_b.assign(c, 0.0f);
    for (std::size_t o = 0; o < c; ++o)
        refine_w[(o * c + o) * 9 + 4] = 1.0f; // center tap
}

namespace {

// Row-softmaxed affinity of the embedded features, N x N with N = H*W.
// Double accumulation keeps the forward pass reproducible and lets the
// row-sum invariant hold tightly.
std::vector<double> attention_impl(const FeatureMap& x, const BlockWeights& w) {
    const int c = x.channels;
    const int ce = w.embed_channels;
    const int n = x.height * x.width;
    if (c != w.channels)
        throw ConfigError("nonlocal: input channels != weight channels");

    // Projected features, ce x N.
    std::vector<double> th(static_cast<std::size_t>(ce) * n, 0.0);
    std::vector<double> ph(static_cast<std::size_t>(ce) * n, 0.0);
    for (int e = 0; e < ce; ++e) {
        for (int j = 0; j < n; ++j) {
            double st = 0.0, sp = 0.0;
            for (int k = 0; k < c; ++k) {
                double xv = x.data[static_cast<std::size_t>(k) * n + j];
                st += static_cast<double>(w.theta_w[static_cast<std::size_t>(e) * c + k]) * xv;
                sp += static_cast<double>(w.phi_w[static_cast<std::size_t>(e) * c + k]) * xv;
            }
            th[static_cast<std::size_t>(e) * n + j] = st;
            ph[static_cast<std::size_t>(e) * n + j] = sp;
        }
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(ce));
    std::vector<double> att(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        double* row = att.data() + static_cast<std::size_t>(i) * n;
        double row_max = -1e300;
        for (int j = 0; j < n; ++j) {
            double dot = 0.0;
            for (int e = 0; e < ce; ++e)
                dot += th[static_cast<std::size_t>(e) * n + i] *
                       ph[static_cast<std::size_t>(e) * n + j];
            row[j] = dot * scale;
            if (row[j] > row_max) row_max = row[j];
        }
        double denom = 0.0;
        for (int j = 0; j < n; ++j) {
            row[j] = std::exp(row[j] - row_max);
            denom += row[j];
        }
        for (int j = 0; j < n; ++j)
            row[j] /= denom;
    }
    return att;
}

} // namespace

std::vector<double> nonlocal_attention(const FeatureMap& x, const BlockWeights& w) {
    w.validate();
    return attention_impl(x, w);
}

FeatureMap nonlocal_block(const FeatureMap& x, const BlockWeights& w) {
    w.validate();
    if (x.empty())
        throw ConfigError("nonlocal: empty input");

    const int c = x.channels;
    const int ce = w.embed_channels;
    const int n = x.height * x.width;
    std::vector<double> att = attention_impl(x, w);

    // g-projection, ce x N.
    std::vector<double> gx(static_cast<std::size_t>(ce) * n, 0.0);
    for (int e = 0; e < ce; ++e) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < c; ++k)
                s += static_cast<double>(w.g_w[static_cast<std::size_t>(e) * c + k]) *
                     x.data[static_cast<std::size_t>(k) * n + j];
            gx[static_cast<std::size_t>(e) * n + j] = s;
        }
    }

    // Aggregate: agg[e][i] = sum_j gx[e][j] * att[i][j].
    std::vector<double> agg(static_cast<std::size_t>(ce) * n, 0.0);
    for (int e = 0; e < ce; ++e) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            const double* row = att.data() + static_cast<std::size_t>(i) * n;
            for (int j = 0; j < n; ++j)
                s += gx[static_cast<std::size_t>(e) * n + j] * row[j];
            agg[static_cast<std::size_t>(e) * n + i] = s;
        }
    }

    FeatureMap out(x.channels, x.height, x.width);
    for (int k = 0; k < c; ++k) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int e = 0; e < ce; ++e)
                s += static_cast<double>(w.out_w[static_cast<std::size_t>(k) * ce + e]) *
                     agg[static_cast<std::size_t>(e) * n + i];
            double v = x.data[static_cast<std::size_t>(k) * n + i] + s;
            if (!std::isfinite(v))
                throw NumericsError("nonlocal: non-finite output value");
            out.data[static_cast<std::size_t>(k) * n + i] = static_cast<float>(v);
        }
    }
    return out;
}

FeatureMap wavelet_nonlocal(const FeatureMap& x, const BlockWeights& w) {
    Subbands s = dwt2(x);
    s.ll = nonlocal_block(s.ll, w);
    return idwt2(s);
}

FeatureMap fuse(const FeatureMap& fpn_branch, const FeatureMap& we_branch,
                const FusionConfig& cfg, const BlockWeights& w) {
    if (!fpn_branch.same_dims(we_branch))
        throw ConfigError("fuse: branch dims differ");
    if (cfg.alpha < 0.0 || cfg.alpha > 1.0)
        throw ConfigError("fuse: alpha outside [0, 1]");
    w.validate();
    if (fpn_branch.channels != w.channels)
        throw ConfigError("fuse: channels != weight channels");

    const int c = fpn_branch.channels;
    const int h = fpn_branch.height;
    const int wd = fpn_branch.width;
    const float alpha = static_cast<float>(cfg.alpha);
    const float beta = static_cast<float>(1.0 - cfg.alpha);

    FeatureMap z(c, h, wd);
    for (std::size_t i = 0; i < z.data.size(); ++i)
        z.data[i] = alpha * we_branch.data[i] + beta * fpn_branch.data[i];

    // 3x3 conv, stride 1, replicate border.
    FeatureMap out(c, h, wd);
    for (int o = 0; o < c; ++o) {
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < wd; ++x) {
                double acc = w.refine_b[o];
                for (int ci = 0; ci < c; ++ci) {
                    const std::size_t kbase = (static_cast<std::size_t>(o) * c + ci) * 9;
                    for (int ky = 0; ky < 3; ++ky) {
                        int yy = y + ky - 1;
                        if (yy < 0) yy = 0;
                        if (yy >= h) yy = h - 1;
                        for (int kx = 0; kx < 3; ++kx) {
                            int xx = x + kx - 1;
                            if (xx < 0) xx = 0;
                            if (xx >= wd) xx = wd - 1;
                            acc += static_cast<double>(w.refine_w[kbase + ky * 3 + kx]) *
                                   z.at(ci, yy, xx);
                        }
                    }
                }
                if (!std::isfinite(acc))
                    throw NumericsError("fuse: non-finite conv output");
                out.at(o, y, x) = static_cast<float>(acc);
            }
        }
    }
    return out;
}

namespace {

struct Xorshift64Star {
    std::uint64_t state;

    explicit Xorshift64Star(std::uint64_t seed)
        : state(seed ^ 0x9E3779B97F4A7C15ULL) {
        if (state == 0) state = 1;
    }

    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }
};

void fill_uniform(std::vector<float>& v, std::size_t count, double s,
                  Xorshift64Star& rng) {
    v.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = static_cast<float>((2.0 * rng.uniform01() - 1.0) * s);
}

FeatureMap as_record(const std::vector<float>& v, int c, int h, int w) {
    return FeatureMap(c, h, w, v);
}

} // namespace

BlockWeights make_weights(int c, int c_embed, std::uint64_t seed) {
    if (c < 1 || c_embed < 1)
        throw ConfigError("make_weights: channel counts must be >= 1");
    BlockWeights w;
    w.channels = c;
    w.embed_channels = c_embed;
    w.seed = seed;

    Xorshift64Star rng(seed);
    const double s = 1.0 / std::sqrt(static_cast<double>(c));
    const std::size_t cc = static_cast<std::size_t>(c);
    const std::size_t ce = static_cast<std::size_t>(c_embed);
    fill_uniform(w.theta_w, ce * cc, s, rng);
    fill_uniform(w.phi_w, ce * cc, s, rng);
    fill_uniform(w.g_w, ce * cc, s, rng);
    fill_uniform(w.out_w, cc * ce, s, rng);
    fill_uniform(w.refine_w, cc * cc * 9, s, rng);
    fill_uniform(w.refine_b, cc, s, rng);
    return w;
}

BlockWeights read_weights(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path);
    FeatureMap theta = read_tensor_record(f);
    FeatureMap phi = read_tensor_record(f);
    FeatureMap g = read_tensor_record(f);
    FeatureMap out = read_tensor_record(f);
    FeatureMap refine = read_tensor_record(f);
    FeatureMap bias = read_tensor_record(f);

    BlockWeights w;
    w.embed_channels = theta.height;
    w.channels = theta.width;
    w.theta_w = std::move(theta.data);
    w.phi_w = std::move(phi.data);
    w.g_w = std::move(g.data);
    w.out_w = std::move(out.data);
    w.refine_w = std::move(refine.data);
    w.refine_b = std::move(bias.data);
    w.validate();
    return w;
}

void write_weights(const BlockWeights& w, const std::string& path) {
    w.validate();
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    const int c = w.channels, ce = w.embed_channels;
    write_tensor_record(as_record(w.theta_w, 1, ce, c), f);
    write_tensor_record(as_record(w.phi_w, 1, ce, c), f);
    write_tensor_record(as_record(w.g_w, 1, ce, c), f);
    write_tensor_record(as_record(w.out_w, 1, c, ce), f);
    write_tensor_record(as_record(w.refine_w, c, c, 9), f);
    write_tensor_record(as_record(w.refine_b, 1, 1, c), f);
    if (!f)
        throw IoError("write failed on " + path);
}

} // namespace lanekit
