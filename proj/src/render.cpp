#include "cst/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace cst {

namespace {

constexpr double kSize = 640;
constexpr double kMargin = 32;
constexpr int kSamplesPerPiece = 32;
const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct XY {
    double x;
    double y;
};

XY from_polar(double theta, double r) {
    const double a = 2 * std::numbers::pi * theta;
    return {r * std::cos(a), r * std::sin(a)};
}

std::vector<std::vector<XY>> edge_shapes(const Drawing& d) {
    std::vector<std::vector<XY>> out;
    for (int e = 0; e < d.edge_count(); ++e) {
        std::vector<XY> pts;
        if (d.backend() == Backend::Cartesian) {
            for (const Point& p : d.cartesian_curve(e).waypoints) pts.push_back({p.x.get_d(), p.y.get_d()});
        } else {
            const auto& w = d.polar_curve(e).waypoints;
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                for (int s = 0; s < kSamplesPerPiece; ++s) {
                    const double t = static_cast<double>(s) / kSamplesPerPiece;
                    pts.push_back(from_polar(w[i].theta.get_d() + t * Rat(w[i + 1].theta - w[i].theta).get_d(),
                                             w[i].r.get_d() + t * Rat(w[i + 1].r - w[i].r).get_d()));
                }
            pts.push_back(from_polar(w.back().theta.get_d(), w.back().r.get_d()));
        }
        out.push_back(std::move(pts));
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Drawing& d, const std::vector<EdgeSet>& highlight) {
    const auto shapes = edge_shapes(d);
    std::vector<XY> verts;
    for (int v = 0; v < d.n(); ++v) {
        if (d.backend() == Backend::Cartesian)
            verts.push_back({d.point(v).x.get_d(), d.point(v).y.get_d()});
        else
            verts.push_back(from_polar(d.polar_point(v).theta.get_d(), d.polar_point(v).r.get_d()));
    }
    std::vector<double> guides;
    if (d.backend() == Backend::Polar) {
        std::set<Rat> radii;
        for (int v = 0; v < d.n(); ++v) radii.insert(d.polar_point(v).r);
        for (const Rat& r : radii) guides.push_back(r.get_d());
    } else if (d.circles()) {
        guides.push_back(std::sqrt(d.circles()->r_in2.get_d()));
        guides.push_back(std::sqrt(d.circles()->r_out2.get_d()));
    }

    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    auto grow = [&](XY p) {
        if (first) {
            lo_x = hi_x = p.x;
            lo_y = hi_y = p.y;
            first = false;
        }
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    };
    for (const auto& s : shapes)
        for (XY p : s) grow(p);
    for (XY p : verts) grow(p);
    for (double r : guides) {
        grow({-r, -r});
        grow({r, r});
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double scale = (kSize - 2 * kMargin) / span;
    auto map = [&](XY p) { return XY{kMargin + (p.x - lo_x) * scale, kSize - kMargin - (p.y - lo_y) * scale}; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!guides.empty()) {
        const XY c = map({0, 0});
        for (double r : guides)
            out << "<circle class=\"guide\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r * scale)
                << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
        out << "<circle class=\"center\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
            << "\" r=\"3\" fill=\"#888888\"/>\n";
    }
    // Plain edges first so highlighted ones are drawn on top.
    for (int layer = -1; layer < static_cast<int>(highlight.size()); ++layer)
        for (int e = 0; e < d.edge_count(); ++e) {
            int owner = -1;
            for (std::size_t k = 0; k < highlight.size() && owner < 0; ++k)
                if (highlight[k].contains(e)) owner = static_cast<int>(k);
            if (owner != layer) continue;
            out << "<path class=\"" << (owner < 0 ? "edge" : "edge hl" + std::to_string(owner)) << "\" data-uv=\""
                << d.edge(e).u << "-" << d.edge(e).v << "\" d=\"";
            for (std::size_t i = 0; i < shapes[e].size(); ++i) {
                const XY p = map(shapes[e][i]);
                out << (i == 0 ? "M" : " L") << num(p.x) << " " << num(p.y);
            }
            if (owner < 0)
                out << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
            else
                out << "\" fill=\"none\" stroke=\"" << kPalette[owner % 6] << "\" stroke-width=\"3.5\"/>\n";
        }
    for (int v = 0; v < d.n(); ++v) {
        const XY p = map(verts[v]);
        out << "<circle class=\"vertex\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
            << "\" r=\"5\" fill=\"black\"/>\n";
        out << "<text x=\"" << num(p.x + 7) << "\" y=\"" << num(p.y - 7) << "\" font-size=\"12\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace cst
