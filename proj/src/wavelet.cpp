#include "lanekit/wavelet.hpp"

namespace lanekit {

Subbands dwt2(const FeatureMap& x) {
    if (x.empty())
        throw ConfigError("dwt2: empty tensor");

    const int c = x.channels;
    const int hh_in = x.height;
    const int ww_in = x.width;
    const int hs = (hh_in + 1) / 2;
    const int ws = (ww_in + 1) / 2;

    Subbands s;
    s.orig_height = hh_in;
    s.orig_width = ww_in;
    s.ll = FeatureMap(c, hs, ws);
    s.lh = FeatureMap(c, hs, ws);
    s.hl = FeatureMap(c, hs, ws);
    s.hh = FeatureMap(c, hs, ws);

    // Replicate-pad odd inputs by clamping the second row/col index.
    for (int ch = 0; ch < c; ++ch) {
        for (int by = 0; by < hs; ++by) {
            int y0 = 2 * by;
            int y1 = y0 + 1 < hh_in ? y0 + 1 : hh_in - 1;
            for (int bx = 0; bx < ws; ++bx) {
                int x0 = 2 * bx;
                int x1 = x0 + 1 < ww_in ? x0 + 1 : ww_in - 1;
                float a = x.at(ch, y0, x0);
                float b = x.at(ch, y0, x1);
                float cc = x.at(ch, y1, x0);
                float d = x.at(ch, y1, x1);
                s.ll.at(ch, by, bx) = (a + b + cc + d) * 0.5f;
                s.lh.at(ch, by, bx) = (a - b + cc - d) * 0.5f;
                s.hl.at(ch, by, bx) = (a + b - cc - d) * 0.5f;
                s.hh.at(ch, by, bx) = (a - b - cc + d) * 0.5f;
            }
        }
    }
    return s;
}

FeatureMap idwt2(const Subbands& s) {
    if (!s.ll.same_dims(s.lh) || !s.ll.same_dims(s.hl) || !s.ll.same_dims(s.hh))
        throw ConfigError("idwt2: subband dims differ");
    if (s.ll.empty())
        throw ConfigError("idwt2: empty subbands");

    const int c = s.ll.channels;
    const int hs = s.ll.height;
    const int ws = s.ll.width;
    int out_h = s.orig_height > 0 ? s.orig_height : 2 * hs;
    int out_w = s.orig_width > 0 ? s.orig_width : 2 * ws;
    if (out_h > 2 * hs || out_w > 2 * ws)
        throw ConfigError("idwt2: original dims larger than subbands cover");

    FeatureMap out(c, out_h, out_w);
    for (int ch = 0; ch < c; ++ch) {
        for (int by = 0; by < hs; ++by) {
            for (int bx = 0; bx < ws; ++bx) {
                float ll = s.ll.at(ch, by, bx);
                float lh = s.lh.at(ch, by, bx);
                float hl = s.hl.at(ch, by, bx);
                float hh = s.hh.at(ch, by, bx);
                float a = (ll + lh + hl + hh) * 0.5f;
                float b = (ll - lh + hl - hh) * 0.5f;
                float cc = (ll + lh - hl - hh) * 0.5f;
                float d = (ll - lh - hl + hh) * 0.5f;
                int y0 = 2 * by, y1 = y0 + 1;
                int x0 = 2 * bx, x1 = x0 + 1;
                if (y0 < out_h && x0 < out_w) out.at(ch, y0, x0) = a;
                if (y0 < out_h && x1 < out_w) out.at(ch, y0, x1) = b;
                if (y1 < out_h && x0 < out_w) out.at(ch, y1, x0) = cc;
                if (y1 < out_h && x1 < out_w) out.at(ch, y1, x1) = d;
            }
        }
    }
    return out;
}

} // namespace lanekit
