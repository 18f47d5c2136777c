#pragma once
#include "omega/centers.hpp"
#include "omega/circle.hpp"

#include <optional>
#include <string>
#include <utility>

namespace omega {

enum class PivotKind { Omega, OmegaPrime, Orthocenter, AH, BH, CH, CustomJ };

std::string pivot_name(PivotKind kind);
PivotKind pivot_from_name(const std::string& name);

// Which of the labels X/Y/Z (slots 0/1/2) the cevian through each vertex
// receives. The label of the second hit on the cevian from a given vertex is
// pinned by the angle the other two hits subtend there, so each pivot carries
// its own permutation and the whole similarity correspondence (X<->A, Y<->B,
// Z<->C) depends on getting it right.
struct LabelPerm {
    int from_a, from_b, from_c;
};
LabelPerm labels_for(PivotKind kind);

//! how the working circle through the pivot is specified
struct CircleSpec {
    enum class Kind { ThroughTwo, MN, Named };
    Kind kind = Kind::Named;
    PtR P, Q;                                                // ThroughTwo
    Rat m, n;                                                // MN (Brocard pivot only)
    NamedCircleKind named = NamedCircleKind::Circumcircle;   // Named

    static CircleSpec through(PtR p, PtR q);
    static CircleSpec mn_params(Rat m, Rat n);
    static CircleSpec named_circle_spec(NamedCircleKind kind);
};

// A fully constructed configuration. Every stored point satisfies its defining
// incidences exactly; everything here is in the exact rational tier.
struct Figure {
    Metric M;
    PivotKind kind = PivotKind::Omega;
    PtR pivot;
    Circle gamma;
    PtR X, Y, Z;            // labeled cevian second hits
    Circle cBC, cCA, cAB;   // circles B-pivot-C, C-pivot-A, A-pivot-B
    PtR U, V, W;            // second meets of those circles with gamma
    PtR P;                  // perspector of {U,V,W} against {X,Y,Z}
    LnR axis;               // line carrying the three side-meets and P
    PtR axis_mA, axis_mB, axis_mC;
    PtR S;                  // radical center of circles AVW, BWU, CUV
    Rat s_circum_residue;   // exact incidence residue of S against the circumcircle
    std::optional<std::pair<Rat, Rat>> mn;
    bool tangency = false;  // some second intersection collapsed onto the pivot

    const PtR& slot(int i) const { return i == 0 ? X : i == 1 ? Y : Z; }
    PtR& slot(int i) { return i == 0 ? X : i == 1 ? Y : Z; }
};

//! the pivot point itself (custom required iff kind == CustomJ)
PtR pivot_point(PivotKind kind, const Metric& M, const PtR* custom = nullptr);

//! realizes a CircleSpec as a circle through the pivot; validates incidence
Circle build_gamma(const PtR& pivot, PivotKind kind, const CircleSpec& spec, const Metric& M);

Figure build_figure(const Metric& M, PivotKind kind, const CircleSpec& spec,
                    const PtR* custom = nullptr);

//! the chord parameters of a Brocard-pivot figure: X ~ (m/b2, 1, m/a2),
//! Y ~ (n/b2, n/c2, 1), Z ~ (1, l/c2, l/a2)
struct LMN {
    Rat l, m, n;
};
LMN recover_lmn(const Figure& fig);

} // namespace omega
