#pragma once
#include "omega/errors.hpp"
#include "omega/metric.hpp"
#include "omega/quadext.hpp"

#include <array>

namespace omega {

// Homogeneous areal (barycentric) point: weights on the reference vertices
// A, B, C. Equality is projective (up to a nonzero scalar); the line at
// infinity is x + y + z = 0.
template <class S>
struct Pt {
    S x{}, y{}, z{};
};

//! homogeneous line with incidence l*x + m*y + n*z = 0
template <class S>
struct Ln {
    S l{}, m{}, n{};
};

using PtR = Pt<Rat>;
using LnR = Ln<Rat>;
using PtQ = Pt<Quad>;
using LnQ = Ln<Quad>;

inline int sgn_of(const Rat& r) { return rsgn(r); }
inline int sgn_of(const Quad& q) { return qsgn(q); }

template <class S>
bool is_zero(const Pt<S>& p) {
    return sgn_of(p.x) == 0 && sgn_of(p.y) == 0 && sgn_of(p.z) == 0;
}
template <class S>
bool is_zero(const Ln<S>& l) {
    return sgn_of(l.l) == 0 && sgn_of(l.m) == 0 && sgn_of(l.n) == 0;
}

template <class S>
Ln<S> join(const Pt<S>& p, const Pt<S>& q) {
    Ln<S> l{p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x};
    if (is_zero(l)) throw GeomError("join of projectively identical points");
    return l;
}

template <class S>
Pt<S> meet(const Ln<S>& l, const Ln<S>& m) {
    Pt<S> p{l.m * m.n - l.n * m.m, l.n * m.l - l.l * m.n, l.l * m.m - l.m * m.l};
    if (is_zero(p)) throw GeomError("meet of projectively identical lines");
    return p;
}

template <class S>
S incidence(const Ln<S>& l, const Pt<S>& p) {
    return l.l * p.x + l.m * p.y + l.n * p.z;
}

template <class S>
bool on_line(const Ln<S>& l, const Pt<S>& p) {
    return sgn_of(incidence(l, p)) == 0;
}

template <class S>
bool proj_eq(const Pt<S>& p, const Pt<S>& q) {
    return sgn_of(p.x * q.y - p.y * q.x) == 0 && sgn_of(p.y * q.z - p.z * q.y) == 0 &&
           sgn_of(p.x * q.z - p.z * q.x) == 0;
}

template <class S>
bool proj_eq(const Ln<S>& p, const Ln<S>& q) {
    return sgn_of(p.l * q.m - p.m * q.l) == 0 && sgn_of(p.m * q.n - p.n * q.m) == 0 &&
           sgn_of(p.l * q.n - p.n * q.l) == 0;
}

template <class S>
S coord_sum(const Pt<S>& p) {
    return p.x + p.y + p.z;
}

template <class S>
bool at_infinity(const Pt<S>& p) {
    return sgn_of(coord_sum(p)) == 0;
}

//! affine representative with x + y + z = 1
template <class S>
Pt<S> normalized(const Pt<S>& p) {
    S s = coord_sum(p);
    if (sgn_of(s) == 0) throw GeomError("cannot normalize a point at infinity");
    return Pt<S>{p.x / s, p.y / s, p.z / s};
}

template <class S>
S det3(const Pt<S>& p, const Pt<S>& q, const Pt<S>& r) {
    return p.x * (q.y * r.z - q.z * r.y) - p.y * (q.x * r.z - q.z * r.x) +
           p.z * (q.x * r.y - q.y * r.x);
}

//! orientation of an ordered affine triple; orientation(A, B, C) = +1
template <class S>
int orientation(const Pt<S>& p, const Pt<S>& q, const Pt<S>& r) {
    int sp = sgn_of(coord_sum(p)), sq = sgn_of(coord_sum(q)), sr = sgn_of(coord_sum(r));
    if (sp == 0 || sq == 0 || sr == 0) throw GeomError("orientation of a point at infinity");
    // det of normalized rows = det of raw rows / (sum_p sum_q sum_r)
    return sgn_of(det3(p, q, r)) * sp * sq * sr;
}

//! exact squared distance via the areal displacement form
template <class S>
S dist_sq(const Pt<S>& p, const Pt<S>& q, const Metric& M) {
    Pt<S> pn = normalized(p), qn = normalized(q);
    S u = qn.x - pn.x, v = qn.y - pn.y, w = qn.z - pn.z;
    return -(S(M.a2) * v * w + S(M.b2) * w * u + S(M.c2) * u * v);
}

//! canonical integer representative: coprime entries, first nonzero positive
PtR reduce(const PtR& p);
LnR reduce(const LnR& l);

//! affine midpoint, reduced
PtR midpoint(const PtR& p, const PtR& q);

inline const PtR& vertex_A() { static const PtR a{Rat(1), Rat(0), Rat(0)}; return a; }
inline const PtR& vertex_B() { static const PtR b{Rat(0), Rat(1), Rat(0)}; return b; }
inline const PtR& vertex_C() { static const PtR c{Rat(0), Rat(0), Rat(1)}; return c; }

//! promote an exact point into the quadratic-extension tier
PtQ to_quad(const PtR& p);

} // namespace omega
