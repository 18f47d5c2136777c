#include "omega/circle.hpp"

#include <array>
#include <vector>

namespace omega {

static void reduce3(std::array<Rat, 3>& v, const char* what) {
    Int L = 1;
    for (const auto& r : v)
        if (rsgn(r) != 0) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), r.get_den().get_mpz_t());
    std::array<Int, 3> n;
    Int g = 0;
    for (int i = 0; i < 3; ++i) {
        n[i] = v[i].get_num() * (L / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
    }
    if (g == 0) throw GeomError(std::string("zero homogeneous triple in ") + what);
    int lead = 0;
    for (int i = 0; i < 3; ++i)
        if (n[i] != 0) {
            lead = mpz_sgn(n[i].get_mpz_t());
            break;
        }
    if (lead < 0) g = -g;
    for (int i = 0; i < 3; ++i) v[i] = Rat(n[i] / g);
}

PtR reduce(const PtR& p) {
    std::array<Rat, 3> v{p.x, p.y, p.z};
    reduce3(v, "point");
    return PtR{v[0], v[1], v[2]};
}

LnR reduce(const LnR& l) {
    std::array<Rat, 3> v{l.l, l.m, l.n};
    reduce3(v, "line");
    return LnR{v[0], v[1], v[2]};
}

PtR midpoint(const PtR& p, const PtR& q) {
    PtR pn = normalized(p), qn = normalized(q);
    return reduce(PtR{pn.x + qn.x, pn.y + qn.y, pn.z + qn.z});
}

PtQ to_quad(const PtR& p) { return PtQ{Quad(p.x), Quad(p.y), Quad(p.z)}; }

Circle circumcircle_of(const Metric& M) { return Circle{M, Rat(0), Rat(0), Rat(0)}; }

Circle circle_through(const PtR& P, const PtR& Q, const PtR& R, const Metric& M) {
    // incidence of each point is linear in (p,q,r):
    //   (x+y+z)(p x + q y + r z) = -(a2 y z + b2 z x + c2 x y)
    std::array<PtR, 3> rows;
    std::array<Rat, 3> rhs;
    const PtR* pts[3] = {&P, &Q, &R};
    for (int i = 0; i < 3; ++i) {
        const PtR& t = *pts[i];
        Rat s = coord_sum(t);
        rows[i] = PtR{s * t.x, s * t.y, s * t.z};
        rhs[i] = -(M.a2 * t.y * t.z + M.b2 * t.z * t.x + M.c2 * t.x * t.y);
    }
    Rat D = det3(rows[0], rows[1], rows[2]);
    if (rsgn(D) == 0) throw GeomError("circle_through: collinear, coincident, or infinite points");
    auto col_det = [&](int col) {
        std::array<PtR, 3> m = rows;
        for (int i = 0; i < 3; ++i) {
            Rat* slot = col == 0 ? &m[i].x : col == 1 ? &m[i].y : &m[i].z;
            *slot = rhs[i];
        }
        return det3(m[0], m[1], m[2]);
    };
    return Circle{M, col_det(0) / D, col_det(1) / D, col_det(2) / D};
}

PtR circle_center(const Circle& c) {
    // adjugate of the symmetric matrix of the full quadratic form, applied to
    // (1,1,1): the pole of the line at infinity, i.e. the center
    const Rat &a2 = c.M.a2, &b2 = c.M.b2, &c2 = c.M.c2;
    Rat m00 = 2 * c.p, m01 = c2 + c.p + c.q, m02 = b2 + c.r + c.p;
    Rat m11 = 2 * c.q, m12 = a2 + c.q + c.r;
    Rat m22 = 2 * c.r;
    Rat x = (m11 * m22 - m12 * m12) + (m02 * m12 - m01 * m22) + (m01 * m12 - m02 * m11);
    Rat y = (m12 * m02 - m01 * m22) + (m00 * m22 - m02 * m02) + (m01 * m02 - m00 * m12);
    Rat z = (m01 * m12 - m11 * m02) + (m01 * m02 - m00 * m12) + (m00 * m11 - m01 * m01);
    PtR ctr{x, y, z};
    if (is_zero(ctr)) throw GeomError("circle_center: degenerate circle");
    if (at_infinity(ctr)) throw GeomError("circle_center: center at infinity");
    return reduce(ctr);
}

Rat circle_r2(const Circle& c) { return circle_eval(c, normalized(circle_center(c))); }

Circle circle_from_center_r2(const Metric& M, const PtR& center, const Rat& r2) {
    // the power of each reference vertex is minus the matching line coefficient
    Rat p = r2 - dist_sq(vertex_A(), center, M);
    Rat q = r2 - dist_sq(vertex_B(), center, M);
    Rat r = r2 - dist_sq(vertex_C(), center, M);
    return Circle{M, p, q, r};
}

Circle circle_on_diameter(const PtR& P, const PtR& Q, const Metric& M) {
    if (proj_eq(P, Q)) throw GeomError("circle_on_diameter: coincident endpoints");
    return circle_from_center_r2(M, midpoint(P, Q), dist_sq(P, Q, M) / 4);
}

LnR radical_axis(const Circle& c1, const Circle& c2) {
    if (!(c1.M == c2.M)) throw GeomError("radical_axis: circles from different metrics");
    LnR ax{c1.p - c2.p, c1.q - c2.q, c1.r - c2.r};
    if (is_zero(ax)) throw GeomError("radical_axis: identical circles");
    return ax;
}

LineCircleHit line_circle_intersections(const LnR& L, const Circle& c) {
    // span L by two of its coordinate-section points
    std::array<PtR, 3> cand{PtR{Rat(0), L.n, -L.m}, PtR{-L.n, Rat(0), L.l}, PtR{L.m, -L.l, Rat(0)}};
    std::vector<PtR> base;
    for (const auto& q : cand) {
        if (is_zero(q)) continue;
        if (!base.empty() && proj_eq(base[0], q)) continue;
        base.push_back(reduce(q));
        if (base.size() == 2) break;
    }
    if (base.size() < 2) throw GeomError("line_circle_intersections: bad line");
    PtR P0 = base[0], P1 = base[1];
    Rat alpha = circle_eval(c, P0);
    Rat gamma = circle_eval(c, P1);
    Rat beta = circle_bform(c, P0, P1);

    LineCircleHit hit;
    hit.disc = beta * beta - 4 * alpha * gamma;
    int ds = rsgn(hit.disc);
    hit.real = ds >= 0;
    hit.tangent = ds == 0;
    hit.rational = ds >= 0 && is_perfect_square(hit.disc);
    if (!hit.real) return hit;

    auto mk = [&](const Quad& s, const Quad& t) {
        return PtQ{s * Quad(P0.x) + t * Quad(P1.x), s * Quad(P0.y) + t * Quad(P1.y),
                   s * Quad(P0.z) + t * Quad(P1.z)};
    };
    if (rsgn(alpha) != 0) {
        // roots of alpha s^2 + beta s t + gamma t^2 in (s : t)
        Quad root = quad_sqrt(hit.disc);
        hit.first = mk(Quad(-beta) + root, Quad(2 * alpha));
        hit.second = mk(Quad(-beta) - root, Quad(2 * alpha));
    } else if (rsgn(beta) != 0) {
        hit.first = mk(Quad(1), Quad(0));                 // P0 itself (t = 0)
        hit.second = mk(Quad(gamma), Quad(-beta));        // the co-root
        hit.rational = true;
    } else if (rsgn(gamma) != 0) {
        hit.first = hit.second = mk(Quad(1), Quad(0));    // double root at P0
        hit.tangent = true;
        hit.rational = true;
    } else {
        throw GeomError("line_circle_intersections: line contained in the conic");
    }
    return hit;
}

Conic circle_to_conic(const Circle& c) {
    return Conic{c.p, c.q, c.r, c.M.a2 + c.q + c.r, c.M.b2 + c.r + c.p, c.M.c2 + c.p + c.q};
}

bool conic_proportional(const Conic& u, const Conic& v) {
    std::array<Rat, 6> a{u.xx, u.yy, u.zz, u.yz, u.zx, u.xy};
    std::array<Rat, 6> b{v.xx, v.yy, v.zz, v.yz, v.zx, v.xy};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (rsgn(a[i] * b[j] - a[j] * b[i]) != 0) return false;
    return true;
}

static Rat det_n(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && rsgn(m[piv][col]) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (rsgn(m[row][col]) == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

Conic conic_through_five(const std::array<PtR, 5>& pts) {
    // rows of the incidence system in (xx, yy, zz, yz, zx, xy)
    std::array<std::array<Rat, 6>, 5> rows;
    for (int i = 0; i < 5; ++i) {
        PtR p = reduce(pts[i]);
        rows[i] = {p.x * p.x, p.y * p.y, p.z * p.z, p.y * p.z, p.z * p.x, p.x * p.y};
    }
    std::array<Rat, 6> coef;
    bool any = false;
    for (int skip = 0; skip < 6; ++skip) {
        std::vector<std::vector<Rat>> m(5, std::vector<Rat>(5));
        for (int i = 0; i < 5; ++i) {
            int cj = 0;
            for (int j = 0; j < 6; ++j) {
                if (j == skip) continue;
                m[i][cj++] = rows[i][j];
            }
        }
        coef[skip] = (skip % 2 == 0 ? det_n(m) : -det_n(m));
        if (rsgn(coef[skip]) != 0) any = true;
    }
    if (!any) throw GeomError("conic_through_five: points do not determine a unique conic");
    return Conic{coef[0], coef[1], coef[2], coef[3], coef[4], coef[5]};
}

} // namespace omega
