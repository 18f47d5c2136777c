#include "omega/figure.hpp"
#include "omega/errors.hpp"

namespace omega {

std::string pivot_name(PivotKind kind) {
    switch (kind) {
    case PivotKind::Omega: return "omega";
    case PivotKind::OmegaPrime: return "omega_prime";
    case PivotKind::Orthocenter: return "orthocenter";
    case PivotKind::AH: return "aH";
    case PivotKind::BH: return "bH";
    case PivotKind::CH: return "cH";
    case PivotKind::CustomJ: return "custom";
    }
    throw GeomError("unknown pivot kind");
}

PivotKind pivot_from_name(const std::string& name) {
    for (PivotKind k : {PivotKind::Omega, PivotKind::OmegaPrime, PivotKind::Orthocenter,
                        PivotKind::AH, PivotKind::BH, PivotKind::CH, PivotKind::CustomJ})
        if (pivot_name(k) == name) return k;
    throw UsageError("unknown pivot: '" + name + "'");
}

LabelPerm labels_for(PivotKind kind) {
    // slots: 0 = X, 1 = Y, 2 = Z. Each permutation is forced by the exact
    // angle bookkeeping at the pivot (the hit whose companion chords subtend
    // the supplement of A there is labeled X, and so on); it is what makes
    // X<->A, Y<->B, Z<->C a similarity correspondence.
    switch (kind) {
    case PivotKind::Omega: return LabelPerm{2, 0, 1};       // A->Z, B->X, C->Y
    case PivotKind::OmegaPrime: return LabelPerm{1, 2, 0};  // A->Y, B->Z, C->X
    case PivotKind::Orthocenter: return LabelPerm{0, 1, 2}; // A->X, B->Y, C->Z
    case PivotKind::AH: return LabelPerm{0, 2, 1};          // A->X, B->Z, C->Y
    case PivotKind::BH: return LabelPerm{2, 1, 0};          // A->Z, B->Y, C->X
    case PivotKind::CH: return LabelPerm{1, 0, 2};          // A->Y, B->X, C->Z
    case PivotKind::CustomJ: return LabelPerm{2, 0, 1};     // Brocard-style default
    }
    throw GeomError("unknown pivot kind");
}

CircleSpec CircleSpec::through(PtR p, PtR q) {
    CircleSpec s;
    s.kind = Kind::ThroughTwo;
    s.P = std::move(p);
    s.Q = std::move(q);
    return s;
}

CircleSpec CircleSpec::mn_params(Rat m, Rat n) {
    CircleSpec s;
    s.kind = Kind::MN;
    s.m = std::move(m);
    s.n = std::move(n);
    return s;
}

CircleSpec CircleSpec::named_circle_spec(NamedCircleKind kind) {
    CircleSpec s;
    s.kind = Kind::Named;
    s.named = kind;
    return s;
}

PtR pivot_point(PivotKind kind, const Metric& M, const PtR* custom) {
    switch (kind) {
    case PivotKind::Omega: return center(CenterId::Omega, M);
    case PivotKind::OmegaPrime: return center(CenterId::OmegaPrime, M);
    case PivotKind::Orthocenter: return center(CenterId::Orthocenter, M);
    case PivotKind::AH: return center(CenterId::AH, M);
    case PivotKind::BH: return center(CenterId::BH, M);
    case PivotKind::CH: return center(CenterId::CH, M);
    case PivotKind::CustomJ:
        if (!custom) throw UsageError("custom pivot requires an explicit point");
        if (at_infinity(*custom)) throw DataError("custom pivot must be a finite point");
        return reduce(*custom);
    }
    throw GeomError("unknown pivot kind");
}

Circle build_gamma(const PtR& pivot, PivotKind kind, const CircleSpec& spec, const Metric& M) {
    switch (spec.kind) {
    case CircleSpec::Kind::ThroughTwo: {
        return circle_through(pivot, spec.P, spec.Q, M); // rejects collinear/coincident
    }
    case CircleSpec::Kind::MN: {
        if (kind != PivotKind::Omega)
            throw UsageError("the (m, n) chord parameterization applies to the Brocard pivot only");
        const Rat &a2 = M.a2, &b2 = M.b2;
        // X on the cevian through B, Y on the cevian through C, cut at parameters m, n
        PtR X{spec.m / b2, Rat(1), spec.m / a2};
        PtR Y{spec.n / b2, spec.n / M.c2, Rat(1)};
        return circle_through(reduce(X), reduce(Y), pivot, M);
    }
    case CircleSpec::Kind::Named: {
        Circle c = named_circle(spec.named, M);
        if (!on_circle(c, pivot))
            throw DataError("named circle '" + named_circle_name(spec.named) +
                            "' does not pass through the pivot");
        return c;
    }
    }
    throw GeomError("unknown circle spec");
}

Figure build_figure(const Metric& M, PivotKind kind, const CircleSpec& spec, const PtR* custom) {
    Figure fig;
    fig.M = M;
    fig.kind = kind;
    fig.pivot = pivot_point(kind, M, custom);
    for (const PtR& v : {vertex_A(), vertex_B(), vertex_C()})
        if (proj_eq(fig.pivot, v)) throw DataError("pivot coincides with a vertex");
    fig.gamma = build_gamma(fig.pivot, kind, spec, M);
    if (spec.kind == CircleSpec::Kind::MN) fig.mn = std::make_pair(spec.m, spec.n);

    // cevian second hits, labeled per the pivot's permutation
    LabelPerm perm = labels_for(kind);
    const PtR* verts[3] = {&vertex_A(), &vertex_B(), &vertex_C()};
    int slot_of[3] = {perm.from_a, perm.from_b, perm.from_c};
    for (int i = 0; i < 3; ++i) {
        PtR hit = reduce(second_intersection(fig.gamma, fig.pivot, join(*verts[i], fig.pivot)));
        if (proj_eq(hit, fig.pivot)) fig.tangency = true;
        fig.slot(slot_of[i]) = hit;
    }

    // vertex-pivot circles (throws if the pivot sits on a side line)
    fig.cBC = circle_through(vertex_B(), fig.pivot, vertex_C(), M);
    fig.cCA = circle_through(vertex_C(), fig.pivot, vertex_A(), M);
    fig.cAB = circle_through(vertex_A(), fig.pivot, vertex_B(), M);

    // U, V, W: both circles pass through the pivot, so their radical axis is
    // the chord through it and the Vieta step lands on the second common point
    auto second_common = [&](const Circle& c) {
        if (c == fig.gamma)
            throw GeomError("working circle coincides with a vertex-pivot circle");
        PtR pt = reduce(second_intersection(fig.gamma, fig.pivot, radical_axis(c, fig.gamma)));
        if (proj_eq(pt, fig.pivot)) fig.tangency = true;
        return pt;
    };
    fig.U = second_common(fig.cBC);
    fig.V = second_common(fig.cCA);
    fig.W = second_common(fig.cAB);

    // perspector: U pairs with the label on the cevian through A, V with B's,
    // W with C's; the third line must pass through the meet of the first two
    LnR lu = join(fig.U, fig.slot(perm.from_a));
    LnR lv = join(fig.V, fig.slot(perm.from_b));
    LnR lw = join(fig.W, fig.slot(perm.from_c));
    fig.P = reduce(meet(lu, lv));
    if (sgn_of(incidence(lw, fig.P)) != 0)
        throw ClaimError("perspector concurrency violated");

    // axis: the three side-meets against the cevians are collinear with P
    fig.axis_mA = reduce(meet(join(fig.V, fig.W), join(vertex_A(), fig.pivot)));
    fig.axis_mB = reduce(meet(join(fig.W, fig.U), join(vertex_B(), fig.pivot)));
    fig.axis_mC = reduce(meet(join(fig.U, fig.V), join(vertex_C(), fig.pivot)));
    fig.axis = reduce(join(fig.axis_mA, fig.axis_mB));
    if (sgn_of(incidence(fig.axis, fig.axis_mC)) != 0 ||
        sgn_of(incidence(fig.axis, fig.P)) != 0)
        throw ClaimError("axis collinearity violated");

    // S: radical center of circles AVW, BWU, CUV, checked on all three
    Circle cAVW = circle_through(vertex_A(), fig.V, fig.W, M);
    Circle cBWU = circle_through(vertex_B(), fig.W, fig.U, M);
    Circle cCUV = circle_through(vertex_C(), fig.U, fig.V, M);
    fig.S = reduce(meet(radical_axis(cAVW, cBWU), radical_axis(cBWU, cCUV)));
    for (const Circle& c : {cAVW, cBWU, cCUV})
        if (!on_circle(c, fig.S)) throw ClaimError("radical center escaped its circles");
    Circle cc = circumcircle_of(M);
    fig.s_circum_residue =
        at_infinity(fig.S) ? circle_eval(cc, fig.S) : power_of_point(fig.S, cc);
    return fig;
}

LMN recover_lmn(const Figure& fig) {
    if (fig.kind != PivotKind::Omega)
        throw UsageError("chord parameters are defined for the Brocard pivot only");
    const Rat &a2 = fig.M.a2, &b2 = fig.M.b2, &c2 = fig.M.c2;
    if (rsgn(fig.X.y) == 0 || rsgn(fig.Y.z) == 0 || rsgn(fig.Z.x) == 0)
        throw GeomError("cevian hit at a vertex: chord parameter is infinite");
    LMN out{c2 * fig.Z.y / fig.Z.x, b2 * fig.X.x / fig.X.y, b2 * fig.Y.x / fig.Y.z};
    // the same parameters seen through the other coordinate of each hit
    if (out.m != a2 * fig.X.z / fig.X.y || out.n != c2 * fig.Y.y / fig.Y.z ||
        out.l != a2 * fig.Z.z / fig.Z.x)
        throw GeomError("cevian hits are off their chords: construction bug");
    return out;
}

} // namespace omega
