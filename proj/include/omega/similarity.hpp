#pragma once
#include "omega/approx.hpp"
#include "omega/figure.hpp"

#include <array>

namespace omega {

//! planar Cartesian point over the exact or approximate tier
template <class S>
struct CPt {
    S x{}, y{};
};
using CPtR = CPt<Rat>;
using CPtD = CPt<double>;

// tiny complex-number helpers (a CPt doubles as the complex number x + iy)
template <class S> CPt<S> cadd(const CPt<S>& u, const CPt<S>& v) { return {u.x + v.x, u.y + v.y}; }
template <class S> CPt<S> csub(const CPt<S>& u, const CPt<S>& v) { return {u.x - v.x, u.y - v.y}; }
template <class S> CPt<S> cmul(const CPt<S>& u, const CPt<S>& v) {
    return {u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x};
}
template <class S> CPt<S> cconj(const CPt<S>& u) { return {u.x, S(0) - u.y}; }
template <class S> S cnorm_sq(const CPt<S>& u) { return u.x * u.x + u.y * u.y; }
CPt<Rat> cdiv(const CPt<Rat>& u, const CPt<Rat>& v);
CPt<double> cdiv(const CPt<double>& u, const CPt<double>& v);

enum class SimClass { Direct, Indirect, None };
std::string sim_class_name(SimClass cls);

struct SimVerdict {
    SimClass cls = SimClass::None;
    Rat ratio_sq; // common squared side ratio; 0 when cls == None
};

//! exact, embedding-free similarity test under the correspondence T1[i] -> T2[i]
SimVerdict classify_similarity(const std::array<PtR, 3>& T1, const std::array<PtR, 3>& T2,
                               const Metric& M);

// Plane similarity z -> alpha z + beta (Direct) or z -> alpha conj(z) + beta
// (Indirect), with alpha as the complex pair.
template <class S>
struct SimMap {
    SimClass kind = SimClass::Direct;
    CPt<S> alpha, beta;
};

//! B -> (0,0), C -> (a, 0), A -> ((a2+c2-b2)/(2a), 2 area / a); exact tier
CPt<Rat> embed_exact(const PtR& p, const Metric& M);
CPt<double> embed_approx(const PtR& p, const Metric& M);
CPt<double> embed_approx(const PtQ& p, const Metric& M);

//! exact inverse of embed_exact via signed-area ratios
PtR cart_to_areal(const CPt<Rat>& p, const Metric& M);

template <class S>
CPt<S> apply_map(const SimMap<S>& f, const CPt<S>& z) {
    CPt<S> base = f.kind == SimClass::Indirect ? cconj(z) : z;
    return cadd(cmul(f.alpha, base), f.beta);
}

//! solve alpha, beta from two pairs; the third pair must check out (exactly at
//! the rational tier, within tolerance at the approximate tier)
SimMap<Rat> fit_similarity(const std::array<std::pair<CPt<Rat>, CPt<Rat>>, 3>& pairs,
                           SimClass kind);
SimMap<double> fit_similarity(const std::array<std::pair<CPt<double>, CPt<double>>, 3>& pairs,
                              SimClass kind);

//! unique fixed point (throws for translations and glide reflections)
CPt<Rat> fixed_point(const SimMap<Rat>& f);
CPt<double> fixed_point(const SimMap<double>& f);

//! invariant-axis direction angle of an indirect map: arg(alpha) / 2
double axis_direction(const SimMap<double>& f);

//! unsigned angle P-vertex-Q in radians, approximate tier
Approx angle_at(const PtR& vertex, const PtR& P, const PtR& Q, const Metric& M);
Approx angle_at(const PtQ& vertex, const PtQ& P, const PtQ& Q, const Metric& M);

//! interior angles (alpha, beta, gamma) at A, B, C
std::array<double, 3> interior_angles(const Metric& M);

// The affine map sending the reference triangle to X, Y, Z, in areal form: it
// transports areal coordinates verbatim, so it needs no embedding and stays
// exact. When XYZ is similar to ABC this *is* the similarity.
struct ArealMap {
    PtR colX, colY, colZ; // images of A, B, C, affinely normalized
};
ArealMap areal_map(const Figure& fig);
PtR apply(const ArealMap& f, const PtR& p);
PtR apply_inverse(const ArealMap& f, const PtR& p);

//! exact fixed point of the transport map; nullopt for translations, pure
//! reflections, and glides (no unique affine fixed point)
std::optional<PtR> areal_fixed_point(const ArealMap& f);

//! everything the similarity layer derives from a figure, exact tier
struct SimilarityInfo {
    SimVerdict verdict;       // ABC vs XYZ under the labeling correspondence
    bool has_R = false;
    PtR R;                    // center of similarity
    PtR D, E, F, T;           // inverse images of U, V, W and of P
    bool has_omega01 = false; // Brocard-pivot extras
    PtR omega0, omega1;
    bool has_conic = false;
    Conic mid_conic;          // through the six chord midpoints
    Rat conic_residue;        // exact residue of the sixth midpoint
};
SimilarityInfo similarity_info(const Figure& fig);

} // namespace omega
