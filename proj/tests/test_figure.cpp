#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omega/figure.hpp"

using namespace omega;

namespace {

const Metric& m131415() {
    static const Metric M = Metric::from_sides(rat(13, 1), rat(14, 1), rat(15, 1));
    return M;
}

PtR pt(long x, long y, long z) { return PtR{rat(x, 1), rat(y, 1), rat(z, 1)}; }

Figure build_through(PivotKind kind, const PtR* custom = nullptr) {
    return build_figure(m131415(), kind, CircleSpec::through(pt(1, 2, 3), pt(3, 1, 2)), custom);
}

} // namespace

TEST_CASE("pivot points hit the frozen coordinates") {
    const Metric& M = m131415();
    CHECK(proj_eq(pivot_point(PivotKind::Omega, M), pt(38025, 33124, 44100)));
    CHECK(proj_eq(pivot_point(PivotKind::OmegaPrime, M), pt(33124, 44100, 38025)));
    CHECK(proj_eq(pivot_point(PivotKind::Orthocenter, M), pt(55, 70, 99)));
    CHECK(proj_eq(pivot_point(PivotKind::AH, M),
                  PtR{rat(-169, 3), rat(-84, 1), rat(-84, 1)}));
    CHECK(proj_eq(pivot_point(PivotKind::BH, M),
                  PtR{rat(-66, 1), rat(-196, 3), rat(-66, 1)}));
    CHECK(proj_eq(pivot_point(PivotKind::CH, M),
                  PtR{rat(-140, 3), rat(-140, 3), rat(-75, 1)}));
    PtR j = pt(2, 3, 5);
    CHECK(proj_eq(pivot_point(PivotKind::CustomJ, M, &j), j));
    CHECK_THROWS_AS(pivot_point(PivotKind::CustomJ, M), UsageError);
    PtR inf = PtR{rat(1, 1), rat(-1, 1), rat(0, 1)};
    CHECK_THROWS_AS(pivot_point(PivotKind::CustomJ, M, &inf), DataError);
}

TEST_CASE("pivot names round-trip") {
    for (PivotKind k : {PivotKind::Omega, PivotKind::OmegaPrime, PivotKind::Orthocenter,
                        PivotKind::AH, PivotKind::BH, PivotKind::CH, PivotKind::CustomJ})
        CHECK(pivot_from_name(pivot_name(k)) == k);
    CHECK_THROWS_AS(pivot_from_name("nonsense"), UsageError);
}

TEST_CASE("labeling permutations are the pinned tables") {
    auto check_perm = [](PivotKind k, int fa, int fb, int fc) {
        LabelPerm p = labels_for(k);
        CHECK(p.from_a == fa);
        CHECK(p.from_b == fb);
        CHECK(p.from_c == fc);
        CHECK(p.from_a + p.from_b + p.from_c == 3); // a permutation of {0,1,2}
        CHECK(p.from_a != p.from_b);
        CHECK(p.from_b != p.from_c);
    };
    check_perm(PivotKind::Omega, 2, 0, 1);
    check_perm(PivotKind::OmegaPrime, 1, 2, 0);
    check_perm(PivotKind::Orthocenter, 0, 1, 2);
    check_perm(PivotKind::AH, 0, 2, 1);
    check_perm(PivotKind::BH, 2, 1, 0);
    check_perm(PivotKind::CH, 1, 0, 2);
    check_perm(PivotKind::CustomJ, 2, 0, 1);
}

TEST_CASE("chord parameterization round-trips and pins X, Y") {
    Figure fig = build_figure(m131415(), PivotKind::Omega, CircleSpec::mn_params(rat(2, 1), rat(3, 1)));
    CHECK(proj_eq(fig.X, pt(169, 16562, 196)));  // (m/b2, 1, m/a2) cleared
    CHECK(proj_eq(fig.Y, pt(225, 196, 14700)));  // (n/b2, n/c2, 1) cleared
    REQUIRE(fig.mn.has_value());
    CHECK(fig.mn->first == rat(2, 1));
    CHECK(fig.mn->second == rat(3, 1));

    LMN lmn = recover_lmn(fig);
    CHECK(lmn.m == rat(2, 1));
    CHECK(lmn.n == rat(3, 1));
    // Z must sit at (1, l/c2, l/a2) up to scale
    PtR zfroml{rat(1, 1), lmn.l / m131415().c2, lmn.l / m131415().a2};
    CHECK(proj_eq(fig.Z, zfroml));

    Figure other = build_through(PivotKind::Orthocenter);
    CHECK_THROWS_AS(recover_lmn(other), UsageError);
    CHECK_THROWS_AS(
        build_figure(m131415(), PivotKind::Orthocenter, CircleSpec::mn_params(rat(2, 1), rat(3, 1))),
        UsageError);
}

TEST_CASE("vertex-pivot circle through B and C has the frozen coefficients") {
    Figure fig = build_figure(m131415(), PivotKind::Omega, CircleSpec::mn_params(rat(2, 1), rat(3, 1)));
    CHECK(fig.cBC.p == rat(-196, 1));
    CHECK(fig.cBC.q == rat(0, 1));
    CHECK(fig.cBC.r == rat(0, 1));
}

TEST_CASE("every figure satisfies its defining incidences exactly") {
    PtR j = pt(2, 3, 5);
    for (PivotKind kind : {PivotKind::Omega, PivotKind::OmegaPrime, PivotKind::Orthocenter,
                           PivotKind::AH, PivotKind::BH, PivotKind::CH, PivotKind::CustomJ}) {
        CAPTURE(pivot_name(kind));
        Figure fig = build_through(kind, kind == PivotKind::CustomJ ? &j : nullptr);
        const Metric& M = fig.M;
        const Circle circum = circumcircle_of(M);

        // all special points on the working circle
        for (const PtR* p : {&fig.pivot, &fig.X, &fig.Y, &fig.Z, &fig.U, &fig.V, &fig.W})
            CHECK(on_circle(fig.gamma, *p));

        // labeled cevian hits on their own cevians
        LabelPerm perm = labels_for(kind);
        CHECK(rsgn(incidence(join(vertex_A(), fig.pivot), fig.slot(perm.from_a))) == 0);
        CHECK(rsgn(incidence(join(vertex_B(), fig.pivot), fig.slot(perm.from_b))) == 0);
        CHECK(rsgn(incidence(join(vertex_C(), fig.pivot), fig.slot(perm.from_c))) == 0);

        // U, V, W on their vertex-pivot circles, which hold their namesakes
        CHECK(on_circle(fig.cBC, fig.U));
        CHECK(on_circle(fig.cCA, fig.V));
        CHECK(on_circle(fig.cAB, fig.W));
        for (const Circle* c : {&fig.cBC, &fig.cCA, &fig.cAB}) CHECK(on_circle(*c, fig.pivot));
        CHECK(on_circle(fig.cBC, vertex_B()));
        CHECK(on_circle(fig.cBC, vertex_C()));
        CHECK(on_circle(fig.cCA, vertex_C()));
        CHECK(on_circle(fig.cCA, vertex_A()));
        CHECK(on_circle(fig.cAB, vertex_A()));
        CHECK(on_circle(fig.cAB, vertex_B()));

        // the perspector really is the common point of the three joins
        LnR lu = join(fig.U, fig.slot(perm.from_a));
        LnR lv = join(fig.V, fig.slot(perm.from_b));
        LnR lw = join(fig.W, fig.slot(perm.from_c));
        CHECK(rsgn(incidence(lu, fig.P)) == 0);
        CHECK(rsgn(incidence(lv, fig.P)) == 0);
        CHECK(rsgn(incidence(lw, fig.P)) == 0);

        // axis: three side-meets plus the perspector, all exactly incident
        for (const PtR* p : {&fig.axis_mA, &fig.axis_mB, &fig.axis_mC, &fig.P})
            CHECK(rsgn(incidence(fig.axis, *p)) == 0);

        // S on each vertex-completed circle and (conjecturally) the circumcircle
        CHECK(on_circle(circle_through(vertex_A(), fig.V, fig.W, M), fig.S));
        CHECK(on_circle(circle_through(vertex_B(), fig.W, fig.U, M), fig.S));
        CHECK(on_circle(circle_through(vertex_C(), fig.U, fig.V, M), fig.S));
        CHECK(rsgn(fig.s_circum_residue) == 0);
        CHECK(on_circle(circum, fig.S));
    }
}

TEST_CASE("custom pivot at a vertex or at infinity is rejected") {
    PtR va = pt(1, 0, 0);
    CHECK_THROWS_AS(build_through(PivotKind::CustomJ, &va), DataError);
    PtR inf = PtR{rat(1, 1), rat(1, 1), rat(-2, 1)};
    CHECK_THROWS_AS(build_through(PivotKind::CustomJ, &inf), DataError);
}

TEST_CASE("named circle specs validate pivot incidence") {
    // the Brocard point lies on the seven-point circle; the orthocenter does not
    Figure fig = build_figure(m131415(), PivotKind::Omega,
                              CircleSpec::named_circle_spec(NamedCircleKind::SevenPoint));
    CHECK(on_circle(fig.gamma, fig.pivot));
    CHECK_THROWS_AS(build_figure(m131415(), PivotKind::Orthocenter,
                                 CircleSpec::named_circle_spec(NamedCircleKind::SevenPoint)),
                    DataError);
    // the orthocentroidal circle carries the median pivots by construction
    for (PivotKind kind : {PivotKind::AH, PivotKind::BH, PivotKind::CH}) {
        Figure f = build_figure(m131415(), kind,
                                CircleSpec::named_circle_spec(NamedCircleKind::Orthocentroidal));
        CHECK(on_circle(f.gamma, f.pivot));
    }
}

TEST_CASE("degenerate circle specs are rejected") {
    // collinear spec points: pivot, A, and a point on line pivot-A
    const Metric& M = m131415();
    PtR piv = pivot_point(PivotKind::Omega, M);
    PtR onAOm = normalized(piv); // pivot itself: circle through duplicate points
    CHECK_THROWS_AS(build_figure(M, PivotKind::Omega, CircleSpec::through(onAOm, pt(1, 2, 3))),
                    GeomError);
}
