#include "cst/generators.hpp"

#include "cst/errors.hpp"
#include "cst/rng.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cst {

const char* to_string(GenClass c) {
    switch (c) {
        case GenClass::Convex: return "convex";
        case GenClass::RandomPoints: return "random_points";
        case GenClass::MonotonePerturbed: return "monotone_perturbed";
        case GenClass::TwoPage: return "two_page";
        case GenClass::Cylindrical: return "cylindrical";
        case GenClass::StronglyCMonotone: return "strongly_cmonotone";
    }
    return "unknown";
}

std::optional<GenClass> gen_class_from_string(const std::string& s) {
    for (GenClass c : {GenClass::Convex, GenClass::RandomPoints, GenClass::MonotonePerturbed, GenClass::TwoPage,
                       GenClass::Cylindrical, GenClass::StronglyCMonotone})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

DrawingData straight_line(const std::vector<Point>& pts) {
    DrawingData d;
    d.n = static_cast<int>(pts.size());
    d.points = pts;
    for (int u = 0; u < d.n; ++u)
        for (int v = u + 1; v < d.n; ++v) d.edges.push_back(Edge{u, v, CartesianCurve{{pts[u], pts[v]}}});
    return d;
}

namespace {

// One attempt; returns nothing to request a resample.
using Attempt = std::function<std::optional<Drawing>(Rng&, int attempt)>;

Drawing with_rejection(const GenSpec& spec, const Attempt& attempt) {
    Rng rng(spec.seed);
    for (int k = 0; k <= spec.max_rejects; ++k) {
        Rng local = rng.split();
        try {
            if (auto d = attempt(local, k)) return std::move(*d);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ParseError) throw;
        }
    }
    fail(ErrorKind::RejectionBudgetExceeded, std::string("no valid ") + to_string(spec.cls) + " drawing with n=" +
                                                 std::to_string(spec.n) + " after " +
                                                 std::to_string(spec.max_rejects) + " rejections");
}

std::vector<int> distinct_values(Rng& rng, int count, int lo, int hi) {
    std::vector<int> pool(hi - lo + 1);
    std::iota(pool.begin(), pool.end(), lo);
    rng.shuffle(pool);
    pool.resize(count);
    return pool;
}

Drawing convex(const GenSpec& spec) {
    std::vector<Point> pts;
    for (int i = 0; i < spec.n; ++i) pts.push_back(point_on_circle(Rat(1), make_rat(4 * i, spec.n)));
    return Drawing::build(straight_line(pts));
}

std::optional<Drawing> random_points(const GenSpec& spec, Rng& rng) {
    std::vector<Point> pts;
    const int side = 4 * spec.n;
    for (int i = 0; i < spec.n; ++i) pts.push_back(Point{rng.range(0, side), rng.range(0, side)});
    for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j) {
            if (pts[i] == pts[j]) return std::nullopt;
            for (int k = j + 1; k < spec.n; ++k)
                if (orientation(pts[i], pts[j], pts[k]) == 0) return std::nullopt;
        }
    return Drawing::build(straight_line(pts));
}

std::optional<Drawing> monotone_perturbed(const GenSpec& spec, Rng& rng, int attempt) {
    const std::vector<int> xs = distinct_values(rng, spec.n, 0, spec.n - 1);
    DrawingData d;
    d.n = spec.n;
    for (int i = 0; i < spec.n; ++i) d.points.push_back(Point{2 * xs[i], rng.range(-2 * spec.n, 2 * spec.n)});
    // The bend shrinks as rejections accumulate.
    const Rat amp = make_rat(1, 1L << std::min(attempt / 20, 20));
    for (int u = 0; u < d.n; ++u)
        for (int v = u + 1; v < d.n; ++v) {
            const Point& a = d.points[u];
            const Point& b = d.points[v];
            const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2 + rng.grid(-amp, amp, 64)};
            d.edges.push_back(Edge{u, v, CartesianCurve{{a, mid, b}}});
        }
    Drawing out = Drawing::build(std::move(d));
    if (!classify_monotone(out)) return std::nullopt;
    return out;
}

std::optional<Drawing> two_page(const GenSpec& spec, Rng& rng) {
    DrawingData d;
    d.n = spec.n;
    std::vector<Rat> grid;
    for (int i = 0; i < spec.n; ++i) {
        d.points.push_back(Point{8 * i + rng.range(0, 5), 0});
        grid.push_back(d.points.back().x);
    }
    for (int i = 0; i + 1 < spec.n; ++i) grid.push_back((d.points[i].x + d.points[i + 1].x) / 2);
    std::sort(grid.begin(), grid.end());
    // Same-page arcs are parabolas with one leading coefficient sampled on a
    // shared grid, so the difference of two of them is linear.
    for (int u = 0; u < d.n; ++u)
        for (int v = u + 1; v < d.n; ++v) {
            const Rat a = d.points[u].x, b = d.points[v].x;
            const int page = rng.coin() ? 1 : -1;
            CartesianCurve c{{d.points[u]}};
            for (const Rat& x : grid)
                if (x > a && x < b) c.waypoints.push_back(Point{x, page * (x - a) * (b - x)});
            c.waypoints.push_back(d.points[v]);
            d.edges.push_back(Edge{u, v, std::move(c)});
        }
    Drawing out = Drawing::build(std::move(d));
    if (!classify_two_page(out)) return std::nullopt;
    return out;
}

// Codes live on [0, 4); an arc runs counter-clockwise from `from` for `len`.
std::vector<Rat> arc_codes(const std::vector<Rat>& grid, const Rat& from, const Rat& len) {
    std::vector<Rat> out{from};
    std::vector<Rat> inner;
    for (const Rat& g : grid) {
        Rat off = g - from;
        while (off < 0) off += 4;
        while (off >= 4) off -= 4;
        if (off > 0 && off < len) inner.push_back(from + off);
    }
    std::sort(inner.begin(), inner.end());
    out.insert(out.end(), inner.begin(), inner.end());
    out.push_back(from + len);
    return out;
}

Rat mod4(Rat c) {
    while (c >= 4) c -= 4;
    while (c < 0) c += 4;
    return c;
}

std::optional<Drawing> cylindrical(const GenSpec& spec, Rng& rng) {
    const int a = spec.inner, b = spec.outer;
    const std::vector<int> raw = distinct_values(rng, a + b, 1, 4095);
    std::vector<Rat> codes;
    for (int c : raw) codes.push_back(make_rat(c, 1024));
    std::sort(codes.begin(), codes.begin() + a);
    std::sort(codes.begin() + a, codes.end());

    // Common sampling grid: every vertex code plus steps of at most 1/8 between them.
    std::vector<Rat> sorted = codes;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Rat> grid;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const Rat lo = sorted[i];
        const Rat hi = i + 1 < sorted.size() ? sorted[i + 1] : Rat(sorted[0] + 4);
        const Rat gap = hi - lo;
        const long parts = static_cast<long>(floor_rat(Rat(gap * 8)).get_num().get_si()) + 1;
        for (long j = 0; j < parts; ++j) grid.push_back(mod4(lo + gap * make_rat(j, parts)));
    }

    DrawingData d;
    d.n = a + b;
    d.circles = Circles{Rat(1), Rat(4)};
    auto radius_of = [&](int v) { return v < a ? Rat(1) : Rat(2); };
    for (int v = 0; v < d.n; ++v) d.points.push_back(point_on_circle(radius_of(v), codes[v]));
    auto sampled = [&](const Rat& from, const Rat& len, const std::function<Rat(const Rat&)>& radius) {
        CartesianCurve c;
        const std::vector<Rat> cs = arc_codes(grid, from, len);
        for (const Rat& x : cs) c.waypoints.push_back(point_on_circle(radius(Rat(x - from)), mod4(x)));
        c.waypoints.front() = point_on_circle(radius(Rat(0)), mod4(from));
        return c;
    };

    for (int u = 0; u < d.n; ++u)
        for (int v = u + 1; v < d.n; ++v) {
            const Rat ccw = mod4(codes[v] - codes[u]);
            const bool forward = ccw <= 2;
            const int s = forward ? u : v;
            const Rat len = forward ? ccw : Rat(4 - ccw);
            if (len == 2) return std::nullopt;
            CartesianCurve c;
            if (u < a && v < a) {
                c.waypoints = {d.points[u], d.points[v]};
            } else if (u >= a && v >= a) {
                c = sampled(codes[s], len, [&](const Rat& x) { return Rat(2 + 8 * x * (len - x)); });
            } else {
                const Rat r0 = radius_of(s), r1 = radius_of(s == u ? v : u);
                c = sampled(codes[s], len, [&](const Rat& x) { return Rat(r0 + (r1 - r0) * x / len); });
            }
            d.edges.push_back(Edge{u, v, std::move(c)});
        }
    Drawing out = Drawing::build(std::move(d));
    if (!classify_cylindrical(out, Rat(1), Rat(4))) return std::nullopt;
    return out;
}

// Periodic piecewise-linear function through (theta_k, r_k), sorted by theta.
Rat periodic_pl(const std::vector<PolarPoint>& knots, Rat theta) {
    theta = frac(theta);
    const int m = static_cast<int>(knots.size());
    for (int i = 0; i < m; ++i) {
        const PolarPoint& p = knots[i];
        PolarPoint q = knots[(i + 1) % m];
        if (i + 1 == m) q.theta += 1;
        Rat t = theta;
        if (t < p.theta) t += 1;
        if (t >= p.theta && t <= q.theta) return p.r + (q.r - p.r) * (t - p.theta) / (q.theta - p.theta);
    }
    ensure(false, "angle outside every spine piece");
    return Rat(0);
}

std::optional<Drawing> strongly_cmonotone(const GenSpec& spec, Rng& rng, int attempt) {
    const int n = spec.n;
    const bool clustered = rng.below(4) == 0;
    const int steps = 4096;
    const std::vector<int> raw = distinct_values(rng, n, 0, steps - 1);
    std::vector<PolarPoint> strip;
    for (int k = 0; k < n; ++k) {
        const Rat theta = clustered ? make_rat(raw[k], steps * 5 / 2) : make_rat(raw[k], steps);
        strip.push_back(PolarPoint{theta, rng.range(1, 3 * n)});
    }
    std::vector<PolarPoint> knots = strip;
    std::sort(knots.begin(), knots.end(), [](const auto& p, const auto& q) { return p.theta < q.theta; });
    if (!clustered)
        for (int i = 0; i < n; ++i) {
            const Rat next = i + 1 < n ? knots[i + 1].theta : Rat(knots[0].theta + 1);
            if (next - knots[i].theta >= make_rat(1, 2)) return std::nullopt;
        }

    // Edges are straight in the (theta, r) strip along the short arc, with an
    // optional bend; the shear r -> R + r - spine(theta) then puts every vertex
    // on one circle without changing any crossing.
    const Rat amp = make_rat(2, 1L << std::min(attempt / 20, 20));
    std::vector<std::vector<PolarPoint>> curves;
    std::vector<std::pair<int, int>> ends;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const Rat ccw = frac(Rat(strip[v].theta - strip[u].theta));
            if (ccw == make_rat(1, 2)) return std::nullopt;
            const bool forward = ccw < make_rat(1, 2);
            const PolarPoint& s = forward ? strip[u] : strip[v];
            const PolarPoint& t = forward ? strip[v] : strip[u];
            const Rat len = forward ? ccw : Rat(1 - ccw);
            std::vector<PolarPoint> pts{s};
            if (rng.coin()) pts.push_back(PolarPoint{s.theta + len / 2, (s.r + t.r) / 2 + rng.grid(-amp, amp, 64)});
            pts.push_back(PolarPoint{s.theta + len, t.r});
            // Break at every vertex angle inside the span: the shear bends there.
            std::vector<PolarPoint> full;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                full.push_back(pts[i]);
                std::vector<Rat> cuts;
                for (const auto& kp : knots) {
                    Rat th = kp.theta;
                    while (th <= pts[i].theta) th += 1;
                    if (th < pts[i + 1].theta) cuts.push_back(th);
                }
                std::sort(cuts.begin(), cuts.end());
                for (const Rat& th : cuts) {
                    const Rat w = (th - pts[i].theta) / (pts[i + 1].theta - pts[i].theta);
                    full.push_back(PolarPoint{th, pts[i].r + (pts[i + 1].r - pts[i].r) * w});
                }
            }
            full.push_back(pts.back());
            curves.push_back(std::move(full));
            ends.emplace_back(u, v);
        }
    Rat lift = 0;
    for (const auto& c : curves)
        for (const auto& p : c) lift = std::max(lift, Rat(periodic_pl(knots, p.theta) - p.r));
    const Rat R = floor_rat(lift) + 1;

    DrawingData d;
    d.n = n;
    d.backend = Backend::Polar;
    for (const auto& p : strip) d.polar.push_back(PolarPoint{p.theta, R});
    for (std::size_t i = 0; i < curves.size(); ++i) {
        PolarCurve pc;
        for (const auto& p : curves[i]) pc.waypoints.push_back(PolarPoint{p.theta, R + p.r - periodic_pl(knots, p.theta)});
        const Rat shift = floor_rat(pc.waypoints.front().theta);
        for (auto& p : pc.waypoints) p.theta -= shift;
        pc.waypoints.front().r = R;
        pc.waypoints.back().r = R;
        d.edges.push_back(Edge{ends[i].first, ends[i].second, std::move(pc)});
    }
    Drawing out = Drawing::build(std::move(d));
    if (!classify_c_monotone(out).strongly) return std::nullopt;
    return out;
}

}  // namespace

Drawing generate(const GenSpec& spec) {
    if (spec.n < 3) fail(ErrorKind::ParseError, "generators need n >= 3");
    if (spec.n * (spec.n - 1) / 2 > kMaxEdges) fail(ErrorKind::TooLarge, "more edges than an edge set can hold");
    switch (spec.cls) {
        case GenClass::Convex: return convex(spec);
        case GenClass::RandomPoints:
            return with_rejection(spec, [&](Rng& r, int) { return random_points(spec, r); });
        case GenClass::MonotonePerturbed:
            return with_rejection(spec, [&](Rng& r, int k) { return monotone_perturbed(spec, r, k); });
        case GenClass::TwoPage: return with_rejection(spec, [&](Rng& r, int) { return two_page(spec, r); });
        case GenClass::Cylindrical:
            if (spec.inner < 1 || spec.outer < 1 || spec.inner + spec.outer != spec.n)
                fail(ErrorKind::ParseError, "cylindrical needs inner, outer >= 1 with inner + outer = n");
            return with_rejection(spec, [&](Rng& r, int) { return cylindrical(spec, r); });
        case GenClass::StronglyCMonotone:
            return with_rejection(spec, [&](Rng& r, int k) { return strongly_cmonotone(spec, r, k); });
    }
    fail(ErrorKind::ParseError, "unknown generator class");
}

}  // namespace cst
