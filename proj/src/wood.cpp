#include "omega/wood.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace omega {

static PtR scale_about(const PtR& center_n, const PtR& p, const Rat& t) {
    PtR pn = normalized(p);
    PtR out{center_n.x + t * (pn.x - center_n.x),
            center_n.y + t * (pn.y - center_n.y),
            center_n.z + t * (pn.z - center_n.z)};
    return reduce(out);
}

WoodResult jk_and_wood(const Figure& fig) {
    if (fig.kind != PivotKind::AH && fig.kind != PivotKind::BH && fig.kind != PivotKind::CH)
        throw GeomError("jk_and_wood: requires a median-pivot figure");
    const Metric& M = fig.M;
    const Circle circum = circumcircle_of(M);
    if (fig.gamma == circum)
        throw GeomError("jk_and_wood: working circle coincides with the circumcircle");

    const PtR ct = normalized(circle_center(fig.gamma));
    const Rat r2 = circle_r2(fig.gamma);

    WoodResult res;
    for (int k = 0; k <= 64; ++k) {
        Rat t(Int(1) << k);
        Circle sigma = (k == 0) ? fig.gamma : circle_from_center_r2(M, ct, t * t * r2);
        LnR rad = radical_axis(sigma, circum);
        LineCircleHit hit = line_circle_intersections(rad, circum);
        if (!hit.real) continue;

        res.ok = true;
        res.k = k;
        res.sigma = sigma;
        res.disc = hit.disc;
        res.tangent = hit.tangent;
        res.Xe = scale_about(ct, fig.X, t);
        res.Ye = scale_about(ct, fig.Y, t);
        res.Ze = scale_about(ct, fig.Z, t);
        if (!on_circle(sigma, res.Xe) || !on_circle(sigma, res.Ye) || !on_circle(sigma, res.Ze))
            throw GeomError("jk_and_wood: enlarged cevian hits left the circle");
        res.J = hit.first;
        res.K = hit.second;

        auto project = [&](const PtR& p) {
            PtQ pq = to_quad(p);
            if (proj_eq(res.J, pq)) // projection direction undefined
                throw GeomError("jk_and_wood: cevian hit coincides with J");
            return second_intersection(circum, res.J, join(res.J, pq));
        };
        res.A1 = project(res.Xe);
        res.B1 = project(res.Ye);
        res.C1 = project(res.Ze);
        return res;
    }
    return res; // ok == false: no enlargement in range produced a real chord
}

static double wrap_pi(double a) {
    constexpr double pi = std::numbers::pi;
    while (a > pi) a -= 2 * pi;
    while (a <= -pi) a += 2 * pi;
    return a;
}

RotationCheck rotation_about_O_check(const Figure& fig, const WoodResult& wood) {
    if (!wood.ok) throw GeomError("rotation_about_O_check: no intersection data");
    const Metric& M = fig.M;
    const Circle circum = circumcircle_of(M);
    const PtR O = center(CenterId::Circumcenter, M);
    const Rat R2 = circle_r2(circum);
    const PtQ Oq = to_quad(O);

    RotationCheck rc;
    rc.radii_exact = dist_sq(Oq, wood.A1, M) == Quad(R2) &&
                     dist_sq(Oq, wood.B1, M) == Quad(R2) &&
                     dist_sq(Oq, wood.C1, M) == Quad(R2);

    auto ang = [&](const PtR& src, const PtQ& dst) {
        auto o = embed_approx(O, M);
        auto s = embed_approx(src, M);
        auto d = embed_approx(dst, M);
        double sx = s.x - o.x, sy = s.y - o.y;
        double dx = d.x - o.x, dy = d.y - o.y;
        return std::atan2(sx * dy - sy * dx, sx * dx + sy * dy);
    };
    double ta = ang(vertex_A(), wood.A1);
    double tb = ang(vertex_B(), wood.B1);
    double tc = ang(vertex_C(), wood.C1);
    rc.angle = ta;
    rc.max_dev = std::max({std::fabs(wrap_pi(ta - tb)), std::fabs(wrap_pi(tb - tc)),
                           std::fabs(wrap_pi(ta - tc))});
    double scale = std::max({std::fabs(ta), std::fabs(tb), std::fabs(tc), 1.0});
    rc.angles_agree = approx_zero(rc.max_dev, scale, global_tol()).equal;
    return rc;
}

} // namespace omega
