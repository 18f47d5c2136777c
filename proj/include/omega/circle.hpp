#pragma once
#include "omega/point.hpp"

#include <array>

namespace omega {

// General areal circle  a2*y*z + b2*z*x + c2*x*y + (x+y+z)(p*x + q*y + r*z) = 0,
// stored as its line part (p, q, r). Only the line part varies: radical axes are
// coefficient differences, the circumcircle is (0,0,0), and "is a circle" holds
// by construction. Coefficients stay rational throughout; only points pick up
// quadratic irrationalities.
struct Circle {
    Metric M;
    Rat p, q, r;
};

inline bool operator==(const Circle& u, const Circle& v) {
    return u.M == v.M && u.p == v.p && u.q == v.q && u.r == v.r;
}

//! the defining quadratic form; zero exactly when the point lies on the circle
template <class S>
S circle_eval(const Circle& c, const Pt<S>& P) {
    return S(c.M.a2) * P.y * P.z + S(c.M.b2) * P.z * P.x + S(c.M.c2) * P.x * P.y +
           coord_sum(P) * (S(c.p) * P.x + S(c.q) * P.y + S(c.r) * P.z);
}

//! the associated symmetric bilinear form, scaled so B(P,P) = 2 E(P)
template <class S>
S circle_bform(const Circle& c, const Pt<S>& P, const Pt<S>& Q) {
    Pt<S> s{P.x + Q.x, P.y + Q.y, P.z + Q.z};
    return circle_eval(c, s) - circle_eval(c, P) - circle_eval(c, Q);
}

template <class S>
bool on_circle(const Circle& c, const Pt<S>& P) {
    return sgn_of(circle_eval(c, P)) == 0;
}

Circle circumcircle_of(const Metric& M);

//! unique circle through three finite, non-collinear points (3x3 linear solve)
Circle circle_through(const PtR& P, const PtR& Q, const PtR& R, const Metric& M);

PtR circle_center(const Circle& c);
Rat circle_r2(const Circle& c);
Circle circle_from_center_r2(const Metric& M, const PtR& center, const Rat& r2);
Circle circle_on_diameter(const PtR& P, const PtR& Q, const Metric& M);

//! dist_sq(P, center) - r^2, computed without radicals; zero iff P on c
template <class S>
S power_of_point(const Pt<S>& P, const Circle& c) {
    return -circle_eval(c, normalized(P));
}

//! (p1-p2, q1-q2, r1-r2); the line at infinity signals concentric circles
LnR radical_axis(const Circle& c1, const Circle& c2);

// Other intersection of a line through a point of the circle, via the root-sum
// (Vieta) factorization of the restricted quadratic: no radicals, so the result
// stays in the scalar tier of the inputs. Tangency returns P itself.
template <class S>
Pt<S> second_intersection(const Circle& c, const Pt<S>& P, const Ln<S>& L) {
    if (!on_circle(c, P)) throw GeomError("second_intersection: point not on circle");
    if (!on_line(L, P)) throw GeomError("second_intersection: line not through point");
    // a second spanning point of L, projectively distinct from P
    std::array<Pt<S>, 3> cand{Pt<S>{S(0), L.n, -L.m}, Pt<S>{-L.n, S(0), L.l},
                              Pt<S>{L.m, -L.l, S(0)}};
    for (const auto& Q : cand) {
        if (is_zero(Q) || proj_eq(P, Q)) continue;
        S e = circle_eval(c, Q);
        S bf = circle_bform(c, P, Q);
        if (sgn_of(e) == 0) {
            if (sgn_of(bf) == 0) throw GeomError("second_intersection: degenerate restriction");
            return Q; // chord endpoint: Q itself is on the circle
        }
        // points on L are s*P + t*Q; E(sP+tQ) = s*t*B + t^2*E(Q) has roots t=0 (P)
        // and (s : t) = (E(Q) : -B); B = 0 is the tangent case and yields P back
        return Pt<S>{e * P.x - bf * Q.x, e * P.y - bf * Q.y, e * P.z - bf * Q.z};
    }
    throw GeomError("second_intersection: could not span the line");
}

//! both intersections of a line with a circle; coordinates live in Q(sqrt(disc))
struct LineCircleHit {
    bool real = false;     // disc >= 0
    bool tangent = false;  // disc == 0 (first == second)
    bool rational = false; // disc is a perfect square: both points exact-rational
    Rat disc;
    PtQ first, second; // first carries +sqrt(disc)
};
LineCircleHit line_circle_intersections(const LnR& L, const Circle& c);

//! general conic, six homogeneous coefficients
struct Conic {
    Rat xx, yy, zz, yz, zx, xy;
};

template <class S>
S conic_eval(const Conic& k, const Pt<S>& P) {
    return S(k.xx) * P.x * P.x + S(k.yy) * P.y * P.y + S(k.zz) * P.z * P.z +
           S(k.yz) * P.y * P.z + S(k.zx) * P.z * P.x + S(k.xy) * P.x * P.y;
}

//! expanded six-coefficient form of a circle
Conic circle_to_conic(const Circle& c);

bool conic_proportional(const Conic& u, const Conic& v);

//! unique conic through five points (signed 5x5 minors of the incidence system)
Conic conic_through_five(const std::array<PtR, 5>& pts);

} // namespace omega
