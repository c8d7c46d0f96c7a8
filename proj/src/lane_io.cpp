#include "lanekit/lane_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lanekit {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t)
        toks.push_back(t);
    return toks;
}

double parse_number(const std::string& tok, int line_no) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + tok.size() || !std::isfinite(v))
        throw ParseError("lane file line " + std::to_string(line_no) +
                         ": bad number '" + tok + "'");
    return v;
}

bool is_plain_uint(const std::string& tok) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (c < '0' || c > '9') return false;
    return true;
}

void check_point(double x, double y, int w, int h, int line_no) {
    if (w <= 0 || h <= 0)
        return; // no header, nothing to check against
    if (x != kInvalidX && (x < 0.0 || x >= w))
        throw ValidationError("lane file line " + std::to_string(line_no) +
                              ": x " + std::to_string(x) + " outside [0, " +
                              std::to_string(w) + ")");
    // Sampling grids span [0, H] inclusive, so row H is legal.
    if (y < 0.0 || y > h)
        throw ValidationError("lane file line " + std::to_string(line_no) +
                              ": y " + std::to_string(y) + " outside [0, " +
                              std::to_string(h) + "]");
}

GtLane parse_gt_line(const std::vector<std::string>& toks, int line_no, int w, int h) {
    if (toks.size() % 2 != 0)
        throw ParseError("lane file line " + std::to_string(line_no) +
                         ": odd coordinate count (" + std::to_string(toks.size()) + ")");
    GtLane lane;
    int valid = 0;
    for (std::size_t i = 0; i < toks.size(); i += 2) {
        Point p;
        p.x = parse_number(toks[i], line_no);
        p.y = parse_number(toks[i + 1], line_no);
        check_point(p.x, p.y, w, h, line_no);
        if (p.x != kInvalidX)
            ++valid;
        lane.points.push_back(p);
    }
    if (valid < 2)
        throw ValidationError("lane file line " + std::to_string(line_no) +
                              ": ground-truth lane needs >= 2 valid points");
    return lane;
}

LanePrior parse_prior_line(const std::vector<std::string>& toks, int line_no,
                           int w, int h) {
    if (toks.size() < 5)
        throw ParseError("lane file line " + std::to_string(line_no) +
                         ": prior record needs a 5-value prefix");
    if ((toks.size() - 5) % 2 != 0)
        throw ParseError("lane file line " + std::to_string(line_no) +
                         ": odd coordinate count after prior prefix (" +
                         std::to_string(toks.size() - 5) + ")");
    LanePrior p;
    p.score = parse_number(toks[0], line_no);
    p.theta = parse_number(toks[1], line_no);
    p.length = parse_number(toks[2], line_no);
    p.start_x = parse_number(toks[3], line_no);
    p.start_y = parse_number(toks[4], line_no);
    if (p.score < 0.0 || p.score > 1.0)
        throw ValidationError("lane file line " + std::to_string(line_no) +
                              ": score outside [0, 1]");
    if (p.length < 0.0)
        throw ValidationError("lane file line " + std::to_string(line_no) +
                              ": negative length");
    p.xs.clear();
    for (std::size_t i = 5; i < toks.size(); i += 2) {
        double x = parse_number(toks[i], line_no);
        double y = parse_number(toks[i + 1], line_no);
        check_point(x, y, w, h, line_no);
        p.xs.push_back(x);
    }
    return p;
}

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

LaneFile parse_impl(const std::string& text, const LaneKind* forced_kind) {
    LaneFile lf;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool header_done = false;
    bool kind_known = forced_kind != nullptr;
    if (forced_kind)
        lf.kind = *forced_kind;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty())
            continue;

        if (!header_done) {
            header_done = true;
            if (toks.size() == 2 && is_plain_uint(toks[0]) && is_plain_uint(toks[1])) {
                lf.image_height = static_cast<int>(parse_number(toks[0], line_no));
                lf.image_width = static_cast<int>(parse_number(toks[1], line_no));
                if (lf.image_height < 1 || lf.image_width < 1)
                    throw ParseError("lane file line " + std::to_string(line_no) +
                                     ": header dims must be positive");
                continue;
            }
        }

        if (!kind_known) {
            lf.kind = (toks.size() % 2 != 0) ? LaneKind::Prior : LaneKind::Ground;
            kind_known = true;
        }
        if (lf.kind == LaneKind::Ground)
            lf.gts.push_back(parse_gt_line(toks, line_no, lf.image_width, lf.image_height));
        else
            lf.priors.push_back(
                parse_prior_line(toks, line_no, lf.image_width, lf.image_height));
    }
    if (lf.kind == LaneKind::Prior && !lf.priors.empty() && lf.image_height < 1)
        throw ParseError("lane file: prior records require an 'H W' header line");
    return lf;
}

} // namespace

LaneFile parse_lanes(const std::string& text) { return parse_impl(text, nullptr); }

LaneFile parse_lanes(const std::string& text, LaneKind kind) {
    return parse_impl(text, &kind);
}

std::string format_lanes(const LaneFile& lf) {
    std::ostringstream out;
    if (lf.image_height > 0 && lf.image_width > 0)
        out << lf.image_height << ' ' << lf.image_width << '\n';

    if (lf.kind == LaneKind::Ground) {
        for (const GtLane& lane : lf.gts) {
            int valid = 0;
            for (const Point& p : lane.points)
                if (p.x != kInvalidX) ++valid;
            if (valid < 2)
                throw ValidationError("lane file: ground-truth lane needs >= 2 valid points");
            bool first = true;
            for (const Point& p : lane.points) {
                if (!first) out << ' ';
                out << fmt4(p.x) << ' ' << fmt4(p.y);
                first = false;
            }
            out << '\n';
        }
    } else {
        if (lf.image_height < 1 || lf.image_width < 1)
            throw ValidationError("lane file: prior records require header dims");
        for (const LanePrior& p : lf.priors) {
            out << fmt4(p.score) << ' ' << fmt4(p.theta) << ' ' << fmt4(p.length)
                << ' ' << fmt4(p.start_x) << ' ' << fmt4(p.start_y);
            const int n = static_cast<int>(p.xs.size());
            for (int i = 0; i < n; ++i) {
                double grid_y = n > 1
                    ? static_cast<double>(i) * lf.image_height / (n - 1)
                    : 0.0;
                out << ' ' << fmt4(p.xs[i]) << ' ' << fmt4(grid_y);
            }
            out << '\n';
        }
    }
    return out.str();
}

LaneFile read_lanes(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_lanes(buf.str());
}

LaneFile read_lanes(const std::string& path, LaneKind kind) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_lanes(buf.str(), kind);
}

void write_lanes(const LaneFile& lf, const std::string& path) {
    std::string text = format_lanes(lf);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f)
        throw IoError("write failed on " + path);
}

} // namespace lanekit
