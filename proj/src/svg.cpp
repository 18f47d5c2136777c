#include "omega/svg.hpp"

#include "omega/similarity.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace omega {

std::string fmt_sig9(double v) {
    if (!std::isfinite(v)) throw GeomError("fmt_sig9: non-finite value");
    if (v == 0.0) v = 0.0; // collapse negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace {

struct XY {
    double x, y;
};

struct Canvas {
    double minx = 0, miny = 0, maxx = 0, maxy = 0;
    bool open = false;

    void grow(double x, double y) {
        if (!open) {
            minx = maxx = x;
            miny = maxy = y;
            open = true;
            return;
        }
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    void grow(const XY& p, double r = 0) {
        grow(p.x - r, p.y - r);
        grow(p.x + r, p.y + r);
    }
};

struct CircleGeom {
    XY c;
    double r;
};

// SVG y grows downward; flip once at embedding time so labels stay upright
XY flip(const CPt<double>& p) { return {p.x, -p.y}; }

CircleGeom circle_geom(const Circle& circ, const Metric& M) {
    PtR ctr = circle_center(circ);
    double r2 = to_double(circle_r2(circ));
    if (r2 < 0) r2 = 0;
    return {flip(embed_approx(ctr, M)), std::sqrt(r2)};
}

//! clip the infinite line p0 + t*(p1-p0) to a rectangle (Liang-Barsky)
bool clip_line(const XY& p0, const XY& p1, const Canvas& box, XY& a, XY& b) {
    double dx = p1.x - p0.x, dy = p1.y - p0.y;
    double t0 = -1e18, t1 = 1e18;
    auto cut = [&](double denom, double num) {
        // constraint form t*denom >= num: a positive denom bounds t from below
        if (denom == 0.0) return num <= 0.0;
        double t = num / denom;
        if (denom > 0)
            t0 = std::max(t0, t);
        else
            t1 = std::min(t1, t);
        return t0 <= t1;
    };
    if (cut(-dx, p0.x - box.maxx) && cut(dx, box.minx - p0.x) &&
        cut(-dy, p0.y - box.maxy) && cut(dy, box.miny - p0.y)) {
        a = {p0.x + t0 * dx, p0.y + t0 * dy};
        b = {p0.x + t1 * dx, p0.y + t1 * dy};
        return true;
    }
    return false;
}

} // namespace

std::string render_svg(const Figure& fig) {
    const Metric& M = fig.M;
    auto pt = [&](const PtR& p) { return flip(embed_approx(p, M)); };

    const CircleGeom circum = circle_geom(circumcircle_of(M), M);
    const CircleGeom gamma = circle_geom(fig.gamma, M);
    const CircleGeom vbc = circle_geom(fig.cBC, M);
    const CircleGeom vca = circle_geom(fig.cCA, M);
    const CircleGeom vab = circle_geom(fig.cAB, M);

    struct Mark {
        const char* label;
        XY at;
    };
    std::vector<Mark> marks = {
        {"A", pt(vertex_A())}, {"B", pt(vertex_B())}, {"C", pt(vertex_C())},
        {"J", pt(fig.pivot)},  {"X", pt(fig.X)},      {"Y", pt(fig.Y)},
        {"Z", pt(fig.Z)},      {"U", pt(fig.U)},      {"V", pt(fig.V)},
        {"W", pt(fig.W)},      {"P", pt(fig.P)},      {"S", pt(fig.S)},
    };

    Canvas box;
    box.grow(circum.c, circum.r);
    box.grow(gamma.c, gamma.r);
    for (const Mark& m : marks) box.grow(m.at);
    // the vertex circles can be huge for near-degenerate figures; include them
    // only when they stay within three circumdiameters
    for (const CircleGeom* g : {&vbc, &vca, &vab})
        if (g->r < 6 * circum.r) box.grow(g->c, g->r);

    double w = box.maxx - box.minx, h = box.maxy - box.miny;
    double margin = 0.05 * std::max(w, h);
    box.minx -= margin;
    box.miny -= margin;
    box.maxx += margin;
    box.maxy += margin;
    w = box.maxx - box.minx;
    h = box.maxy - box.miny;
    const double diag = std::hypot(w, h);
    const double thin = diag * 0.0015, thick = diag * 0.003;
    const double dot = diag * 0.006, fs = diag * 0.028;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt_sig9(box.minx)
        << " " << fmt_sig9(box.miny) << " " << fmt_sig9(w) << " " << fmt_sig9(h)
        << "\">\n";

    auto circle_el = [&](const CircleGeom& g, const char* stroke, double sw) {
        out << "  <circle cx=\"" << fmt_sig9(g.c.x) << "\" cy=\"" << fmt_sig9(g.c.y)
            << "\" r=\"" << fmt_sig9(g.r) << "\" fill=\"none\" stroke=\"" << stroke
            << "\" stroke-width=\"" << fmt_sig9(sw) << "\"/>\n";
    };
    circle_el(circum, "#1f4e8c", thick);
    circle_el(gamma, "#b81f3c", thick);
    circle_el(vbc, "#8a8a8a", thin);
    circle_el(vca, "#8a8a8a", thin);
    circle_el(vab, "#8a8a8a", thin);

    out << "  <path d=\"M " << fmt_sig9(marks[0].at.x) << " " << fmt_sig9(marks[0].at.y)
        << " L " << fmt_sig9(marks[1].at.x) << " " << fmt_sig9(marks[1].at.y) << " L "
        << fmt_sig9(marks[2].at.x) << " " << fmt_sig9(marks[2].at.y)
        << " Z\" fill=\"none\" stroke=\"#222222\" stroke-width=\"" << fmt_sig9(thick)
        << "\"/>\n";

    // the perspector axis, clipped to the frame; needs two finite points
    {
        std::vector<XY> finite;
        for (const PtR* p : {&fig.axis_mA, &fig.axis_mB, &fig.axis_mC, &fig.P}) {
            if (at_infinity(*p)) continue;
            finite.push_back(pt(*p));
            if (finite.size() == 2) break;
        }
        XY a, b;
        if (finite.size() == 2 && clip_line(finite[0], finite[1], box, a, b)) {
            out << "  <line x1=\"" << fmt_sig9(a.x) << "\" y1=\"" << fmt_sig9(a.y)
                << "\" x2=\"" << fmt_sig9(b.x) << "\" y2=\"" << fmt_sig9(b.y)
                << "\" stroke=\"#2e7d32\" stroke-width=\"" << fmt_sig9(thin)
                << "\" stroke-dasharray=\"" << fmt_sig9(4 * thin) << " "
                << fmt_sig9(2 * thin) << "\"/>\n";
        }
    }

    for (const Mark& m : marks) {
        out << "  <circle cx=\"" << fmt_sig9(m.at.x) << "\" cy=\"" << fmt_sig9(m.at.y)
            << "\" r=\"" << fmt_sig9(dot) << "\" fill=\"#111111\"/>\n";
        out << "  <text x=\"" << fmt_sig9(m.at.x + 1.2 * dot) << "\" y=\""
            << fmt_sig9(m.at.y - 1.2 * dot) << "\" font-family=\"sans-serif\" font-size=\""
            << fmt_sig9(fs) << "\" fill=\"#111111\">" << m.label << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace omega
