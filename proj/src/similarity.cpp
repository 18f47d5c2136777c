#include "omega/similarity.hpp"
#include "omega/errors.hpp"

#include <cmath>

namespace omega {

CPt<Rat> cdiv(const CPt<Rat>& u, const CPt<Rat>& v) {
    Rat n = cnorm_sq(v);
    if (rsgn(n) == 0) throw GeomError("complex division by zero");
    CPt<Rat> w = cmul(u, cconj(v));
    return {w.x / n, w.y / n};
}

CPt<double> cdiv(const CPt<double>& u, const CPt<double>& v) {
    double n = cnorm_sq(v);
    if (n == 0.0) throw GeomError("complex division by zero");
    CPt<double> w = cmul(u, cconj(v));
    return {w.x / n, w.y / n};
}

std::string sim_class_name(SimClass cls) {
    switch (cls) {
    case SimClass::Direct: return "direct";
    case SimClass::Indirect: return "indirect";
    case SimClass::None: return "none";
    }
    throw GeomError("unknown similarity class");
}

SimVerdict classify_similarity(const std::array<PtR, 3>& T1, const std::array<PtR, 3>& T2,
                               const Metric& M) {
    std::array<Rat, 3> d1, d2;
    for (int i = 0; i < 3; ++i) {
        d1[i] = dist_sq(T1[i], T1[(i + 1) % 3], M);
        d2[i] = dist_sq(T2[i], T2[(i + 1) % 3], M);
        if (rsgn(d1[i]) == 0 || rsgn(d2[i]) == 0)
            throw GeomError("classify_similarity: coincident vertices");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (d2[i] * d1[j] != d2[j] * d1[i]) return SimVerdict{SimClass::None, Rat(0)};
    int o1 = orientation(T1[0], T1[1], T1[2]);
    int o2 = orientation(T2[0], T2[1], T2[2]);
    if (o1 == 0 || o2 == 0) throw GeomError("classify_similarity: degenerate triangle");
    return SimVerdict{o1 == o2 ? SimClass::Direct : SimClass::Indirect, d2[0] / d1[0]};
}

CPt<Rat> embed_exact(const PtR& p, const Metric& M) {
    Rat a = M.side_a(), area = M.area(); // both throw for non-embeddable metrics
    PtR n = normalized(p);
    CPt<Rat> A{(M.a2 + M.c2 - M.b2) / (2 * a), 2 * area / a};
    // B = (0,0), C = (a,0)
    return {n.x * A.x + n.z * a, n.x * A.y};
}

CPt<double> embed_approx(const PtR& p, const Metric& M) {
    double a = std::sqrt(to_double(M.a2));
    double area = std::sqrt(to_double(M.sixteen_area_sq())) / 4;
    PtR n = normalized(p);
    double ax = to_double(M.a2 + M.c2 - M.b2) / (2 * a), ay = 2 * area / a;
    return {to_double(n.x) * ax + to_double(n.z) * a, to_double(n.x) * ay};
}

CPt<double> embed_approx(const PtQ& p, const Metric& M) {
    double a = std::sqrt(to_double(M.a2));
    double area = std::sqrt(to_double(M.sixteen_area_sq())) / 4;
    PtQ n = normalized(p);
    double ax = to_double(M.a2 + M.c2 - M.b2) / (2 * a), ay = 2 * area / a;
    return {to_double(n.x) * ax + to_double(n.z) * a, to_double(n.x) * ay};
}

PtR cart_to_areal(const CPt<Rat>& p, const Metric& M) {
    Rat a = M.side_a(), area = M.area();
    CPt<Rat> A{(M.a2 + M.c2 - M.b2) / (2 * a), 2 * area / a};
    CPt<Rat> B{Rat(0), Rat(0)}, C{a, Rat(0)};
    // explicit return type: a deduced one would be a dangling GMP expression template
    auto signed2 = [](const CPt<Rat>& u, const CPt<Rat>& v, const CPt<Rat>& w) -> Rat {
        return (v.x - u.x) * (w.y - u.y) - (v.y - u.y) * (w.x - u.x);
    };
    // weights are the vertex-opposite signed areas (the common normalizer divides out)
    return reduce(PtR{signed2(p, B, C), signed2(A, p, C), signed2(A, B, p)});
}

template <class S>
static SimMap<S> fit_impl(const std::array<std::pair<CPt<S>, CPt<S>>, 3>& pairs, SimClass kind,
                          bool exact) {
    if (kind == SimClass::None) throw GeomError("fit_similarity: nothing to fit");
    SimMap<S> f;
    f.kind = kind;
    CPt<S> ds = csub(pairs[1].first, pairs[0].first);
    CPt<S> dt = csub(pairs[1].second, pairs[0].second);
    f.alpha = kind == SimClass::Indirect ? cdiv(dt, cconj(ds)) : cdiv(dt, ds);
    CPt<S> s0 = kind == SimClass::Indirect ? cconj(pairs[0].first) : pairs[0].first;
    f.beta = csub(pairs[0].second, cmul(f.alpha, s0));
    CPt<S> got = apply_map(f, pairs[2].first);
    if (exact) {
        if (!(got.x == pairs[2].second.x && got.y == pairs[2].second.y))
            throw GeomError("fit_similarity: third pair breaks the map");
    } else {
        double gx = to_double(S(got.x)), gy = to_double(S(got.y));
        double tx = to_double(S(pairs[2].second.x)), ty = to_double(S(pairs[2].second.y));
        double scale = std::max(std::max(std::fabs(gx), std::fabs(gy)),
                                std::max(std::fabs(tx), std::fabs(ty)));
        if (!approx_zero(gx - tx, scale).equal || !approx_zero(gy - ty, scale).equal)
            throw GeomError("fit_similarity: third pair breaks the map");
    }
    return f;
}

SimMap<Rat> fit_similarity(const std::array<std::pair<CPt<Rat>, CPt<Rat>>, 3>& pairs,
                           SimClass kind) {
    return fit_impl(pairs, kind, true);
}

SimMap<double> fit_similarity(const std::array<std::pair<CPt<double>, CPt<double>>, 3>& pairs,
                              SimClass kind) {
    return fit_impl(pairs, kind, false);
}

static bool scalar_zero(const Rat& v) { return rsgn(v) == 0; }
static bool scalar_zero(double v) { return v == 0.0; }

template <class S>
static CPt<S> fixed_impl(const SimMap<S>& f) {
    if (f.kind == SimClass::Direct) {
        CPt<S> den = csub(CPt<S>{S(1), S(0)}, f.alpha);
        if (scalar_zero(den.x) && scalar_zero(den.y))
            throw GeomError("fixed_point: translation has no fixed point");
        return cdiv(f.beta, den);
    }
    // indirect: solve z = alpha conj(z) + beta as a 2x2 linear system;
    // determinant 1 - |alpha|^2 vanishes exactly for reflections and glides
    S det = S(1) - cnorm_sq(f.alpha);
    if (scalar_zero(det))
        throw GeomError("fixed_point: glide reflection has no fixed point");
    const S &p = f.alpha.x, &q = f.alpha.y;
    return {(f.beta.x * (S(1) + p) + f.beta.y * q) / det,
            (f.beta.x * q + f.beta.y * (S(1) - p)) / det};
}

CPt<Rat> fixed_point(const SimMap<Rat>& f) { return fixed_impl(f); }
CPt<double> fixed_point(const SimMap<double>& f) { return fixed_impl(f); }

double axis_direction(const SimMap<double>& f) {
    if (f.kind != SimClass::Indirect) throw GeomError("axis_direction: map is not indirect");
    return std::atan2(f.alpha.y, f.alpha.x) / 2;
}

static double angle_between(const CPt<double>& v, const CPt<double>& w) {
    double cross = v.x * w.y - v.y * w.x;
    double dot = v.x * w.x + v.y * w.y;
    return std::fabs(std::atan2(cross, dot));
}

Approx angle_at(const PtR& vertex, const PtR& P, const PtR& Q, const Metric& M) {
    CPt<double> o = embed_approx(vertex, M);
    return Approx{angle_between(csub(embed_approx(P, M), o), csub(embed_approx(Q, M), o)),
                  global_tol()};
}

Approx angle_at(const PtQ& vertex, const PtQ& P, const PtQ& Q, const Metric& M) {
    CPt<double> o = embed_approx(vertex, M);
    return Approx{angle_between(csub(embed_approx(P, M), o), csub(embed_approx(Q, M), o)),
                  global_tol()};
}

std::array<double, 3> interior_angles(const Metric& M) {
    double a2 = to_double(M.a2), b2 = to_double(M.b2), c2 = to_double(M.c2);
    double a = std::sqrt(a2), b = std::sqrt(b2), c = std::sqrt(c2);
    return {std::acos((b2 + c2 - a2) / (2 * b * c)), std::acos((c2 + a2 - b2) / (2 * c * a)),
            std::acos((a2 + b2 - c2) / (2 * a * b))};
}

ArealMap areal_map(const Figure& fig) {
    // points on a circle are never at infinity, so the columns normalize
    return ArealMap{normalized(fig.X), normalized(fig.Y), normalized(fig.Z)};
}

PtR apply(const ArealMap& f, const PtR& p) {
    return reduce(PtR{f.colX.x * p.x + f.colY.x * p.y + f.colZ.x * p.z,
                      f.colX.y * p.x + f.colY.y * p.y + f.colZ.y * p.z,
                      f.colX.z * p.x + f.colY.z * p.y + f.colZ.z * p.z});
}

PtR apply_inverse(const ArealMap& f, const PtR& p) {
    // adjugate solve: projective, exact, no divisions
    const PtR &X = f.colX, &Y = f.colY, &Z = f.colZ;
    PtR r0{Y.y * Z.z - Y.z * Z.y, -(Y.x * Z.z - Y.z * Z.x), Y.x * Z.y - Y.y * Z.x};
    PtR r1{-(X.y * Z.z - X.z * Z.y), X.x * Z.z - X.z * Z.x, -(X.x * Z.y - X.y * Z.x)};
    PtR r2{X.y * Y.z - X.z * Y.y, -(X.x * Y.z - X.z * Y.x), X.x * Y.y - X.y * Y.x};
    PtR out{r0.x * p.x + r0.y * p.y + r0.z * p.z, r1.x * p.x + r1.y * p.y + r1.z * p.z,
            r2.x * p.x + r2.y * p.y + r2.z * p.z};
    if (is_zero(out)) throw GeomError("apply_inverse: degenerate transport");
    return reduce(out);
}

std::optional<PtR> areal_fixed_point(const ArealMap& f) {
    // kernel vector of N = M - I via a nonzero column of adj(N); the affine
    // fixed point is the kernel direction with nonzero coordinate sum
    Rat n00 = f.colX.x - 1, n01 = f.colY.x, n02 = f.colZ.x;
    Rat n10 = f.colX.y, n11 = f.colY.y - 1, n12 = f.colZ.y;
    Rat n20 = f.colX.z, n21 = f.colY.z, n22 = f.colZ.z - 1;
    std::array<PtR, 3> cols = {
        PtR{n11 * n22 - n12 * n21, -(n10 * n22 - n12 * n20), n10 * n21 - n11 * n20},
        PtR{-(n01 * n22 - n02 * n21), n00 * n22 - n02 * n20, -(n00 * n21 - n01 * n20)},
        PtR{n01 * n12 - n02 * n11, -(n00 * n12 - n02 * n10), n00 * n11 - n01 * n10}};
    for (const PtR& c : cols)
        if (!is_zero(c) && !at_infinity(c)) return reduce(c);
    return std::nullopt;
}

SimilarityInfo similarity_info(const Figure& fig) {
    SimilarityInfo info;
    info.verdict = classify_similarity({vertex_A(), vertex_B(), vertex_C()},
                                       {fig.X, fig.Y, fig.Z}, fig.M);
    ArealMap f = areal_map(fig);
    if (auto r = areal_fixed_point(f)) {
        info.has_R = true;
        info.R = *r;
    }
    info.D = apply_inverse(f, fig.U);
    info.E = apply_inverse(f, fig.V);
    info.F = apply_inverse(f, fig.W);
    info.T = apply_inverse(f, fig.P);
    if (fig.kind == PivotKind::Omega) {
        PtR w = center(CenterId::Omega, fig.M);
        info.omega0 = apply_inverse(f, w);
        info.omega1 = apply(f, w);
        info.has_omega01 = true;
    }
    // midpoints of AX, BY, CZ, DU, EV, FW lie on one conic
    std::array<PtR, 5> first5 = {midpoint(vertex_A(), fig.X), midpoint(vertex_B(), fig.Y),
                                 midpoint(vertex_C(), fig.Z), midpoint(info.D, fig.U),
                                 midpoint(info.E, fig.V)};
    PtR sixth = midpoint(info.F, fig.W);
    info.mid_conic = conic_through_five(first5);
    info.conic_residue = conic_eval(info.mid_conic, sixth);
    info.has_conic = true;
    return info;
}

} // namespace omega
