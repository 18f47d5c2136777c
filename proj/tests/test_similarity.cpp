#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omega/similarity.hpp"

#include <cmath>

using namespace omega;

namespace {

const Metric& m131415() {
    static const Metric M = Metric::from_sides(rat(13, 1), rat(14, 1), rat(15, 1));
    return M;
}

PtR pt(long x, long y, long z) { return PtR{rat(x, 1), rat(y, 1), rat(z, 1)}; }

Figure build_kind(PivotKind kind) {
    PtR j = pt(2, 3, 5);
    return build_figure(m131415(), kind, CircleSpec::through(pt(1, 2, 3), pt(3, 1, 2)),
                        kind == PivotKind::CustomJ ? &j : nullptr);
}

} // namespace

TEST_CASE("exact Cartesian embedding of the reference triangle") {
    const Metric& M = m131415();
    REQUIRE(M.embeddable());
    CPtR a = embed_exact(vertex_A(), M);
    CHECK(a.x == rat(99, 13));
    CHECK(a.y == rat(168, 13));
    CPtR b = embed_exact(vertex_B(), M);
    CHECK(b.x == rat(0, 1));
    CHECK(b.y == rat(0, 1));
    CPtR c = embed_exact(vertex_C(), M);
    CHECK(c.x == rat(13, 1));
    CHECK(c.y == rat(0, 1));

    // areal -> Cartesian -> areal is the identity
    for (PtR p : {pt(1, 1, 1), pt(2, -3, 7), pt(55, 70, 99)})
        CHECK(proj_eq(cart_to_areal(embed_exact(p, M), M), p));

    // the approximate embedding agrees with the exact one
    CPtD ad = embed_approx(vertex_A(), M);
    CHECK(approx_eq(ad.x, to_double(a.x)).equal);
    CHECK(approx_eq(ad.y, to_double(a.y)).equal);
}

TEST_CASE("embedding respects the metric distances") {
    const Metric& M = m131415();
    auto dist2 = [](const CPtR& u, const CPtR& v) { return cnorm_sq(csub(u, v)); };
    CHECK(dist2(embed_exact(vertex_B(), M), embed_exact(vertex_C(), M)) == M.a2);
    CHECK(dist2(embed_exact(vertex_C(), M), embed_exact(vertex_A(), M)) == M.b2);
    CHECK(dist2(embed_exact(vertex_A(), M), embed_exact(vertex_B(), M)) == M.c2);
}

TEST_CASE("similarity verdicts per pivot") {
    CHECK(similarity_info(build_kind(PivotKind::Omega)).verdict.cls == SimClass::Indirect);
    CHECK(similarity_info(build_kind(PivotKind::OmegaPrime)).verdict.cls == SimClass::Indirect);
    CHECK(similarity_info(build_kind(PivotKind::Orthocenter)).verdict.cls == SimClass::Indirect);
    CHECK(similarity_info(build_kind(PivotKind::AH)).verdict.cls == SimClass::Direct);
    CHECK(similarity_info(build_kind(PivotKind::BH)).verdict.cls == SimClass::Direct);
    CHECK(similarity_info(build_kind(PivotKind::CH)).verdict.cls == SimClass::Direct);
    CHECK(similarity_info(build_kind(PivotKind::CustomJ)).verdict.cls == SimClass::None);
}

TEST_CASE("classification is exact and symmetric in the correspondence") {
    const Metric& M = m131415();
    std::array<PtR, 3> ref{vertex_A(), vertex_B(), vertex_C()};
    SimVerdict self = classify_similarity(ref, ref, M);
    CHECK(self.cls == SimClass::Direct);
    CHECK(self.ratio_sq == rat(1, 1));

    // swapping two reference vertices flips the orientation: indirect, ratio 1
    std::array<PtR, 3> swapped{vertex_A(), vertex_C(), vertex_B()};
    SimVerdict sw = classify_similarity(ref, swapped, M);
    CHECK(sw.cls == ((M.b2 == M.c2) ? SimClass::Indirect : SimClass::None));

    Figure fig = build_kind(PivotKind::Omega);
    std::array<PtR, 3> xyz{fig.X, fig.Y, fig.Z};
    SimVerdict v = classify_similarity(ref, xyz, M);
    SimVerdict w = classify_similarity(xyz, ref, M);
    CHECK(v.cls == SimClass::Indirect);
    CHECK(w.cls == SimClass::Indirect);
    CHECK(v.ratio_sq * w.ratio_sq == rat(1, 1));

    CHECK_THROWS_AS(classify_similarity(ref, {vertex_A(), vertex_A(), vertex_B()}, M),
                    GeomError);
}

TEST_CASE("areal transport map sends the reference triangle to X, Y, Z") {
    for (PivotKind kind : {PivotKind::Omega, PivotKind::BH, PivotKind::CustomJ}) {
        CAPTURE(pivot_name(kind));
        Figure fig = build_kind(kind);
        ArealMap f = areal_map(fig);
        CHECK(proj_eq(apply(f, vertex_A()), fig.X));
        CHECK(proj_eq(apply(f, vertex_B()), fig.Y));
        CHECK(proj_eq(apply(f, vertex_C()), fig.Z));
        for (PtR p : {pt(1, 1, 1), pt(2, -3, 7), pt(5, 1, 4)})
            CHECK(proj_eq(apply_inverse(f, apply(f, p)), p));
    }
}

TEST_CASE("inverse images of U, V, W land on the circumcircle") {
    const Circle circum = circumcircle_of(m131415());
    for (PivotKind kind :
         {PivotKind::Omega, PivotKind::OmegaPrime, PivotKind::Orthocenter, PivotKind::AH,
          PivotKind::BH, PivotKind::CH}) {
        CAPTURE(pivot_name(kind));
        SimilarityInfo info = similarity_info(build_kind(kind));
        CHECK(on_circle(circum, info.D));
        CHECK(on_circle(circum, info.E));
        CHECK(on_circle(circum, info.F));
    }
}

TEST_CASE("inverse-transported perspector lies on its vertex lines") {
    // Brocard pivot: T on AE, BF, CD
    {
        SimilarityInfo info = similarity_info(build_kind(PivotKind::Omega));
        CHECK(rsgn(det3(vertex_A(), info.E, info.T)) == 0);
        CHECK(rsgn(det3(vertex_B(), info.F, info.T)) == 0);
        CHECK(rsgn(det3(vertex_C(), info.D, info.T)) == 0);
    }
    // median pivot of the B kind: T on AF, BE, CD
    {
        SimilarityInfo info = similarity_info(build_kind(PivotKind::BH));
        CHECK(rsgn(det3(vertex_A(), info.F, info.T)) == 0);
        CHECK(rsgn(det3(vertex_B(), info.E, info.T)) == 0);
        CHECK(rsgn(det3(vertex_C(), info.D, info.T)) == 0);
    }
    // orthocenter pivot: the fixed point is the perspector, so T = P
    {
        Figure fig = build_kind(PivotKind::Orthocenter);
        SimilarityInfo info = similarity_info(fig);
        REQUIRE(info.has_R);
        CHECK(proj_eq(info.R, fig.P));
        CHECK(proj_eq(info.T, fig.P));
        CHECK(rsgn(det3(vertex_A(), fig.P, info.D)) == 0);
        CHECK(rsgn(det3(vertex_B(), fig.P, info.E)) == 0);
        CHECK(rsgn(det3(vertex_C(), fig.P, info.F)) == 0);
    }
}

TEST_CASE("similarity center from transport agrees with the Cartesian fit") {
    const Metric& M = m131415();
    Figure fig = build_kind(PivotKind::Orthocenter);
    SimilarityInfo info = similarity_info(fig);
    REQUIRE(info.has_R);

    std::array<std::pair<CPtR, CPtR>, 3> pairs{
        std::pair{embed_exact(vertex_A(), M), embed_exact(fig.X, M)},
        std::pair{embed_exact(vertex_B(), M), embed_exact(fig.Y, M)},
        std::pair{embed_exact(vertex_C(), M), embed_exact(fig.Z, M)},
    };
    SimMap<Rat> f = fit_similarity(pairs, SimClass::Indirect);
    CPtR fixed = fixed_point(f);
    CHECK(proj_eq(cart_to_areal(fixed, M), info.R));

    // the squared scale of the map equals the classification ratio
    CHECK(cnorm_sq(f.alpha) == info.verdict.ratio_sq);

    // approximate-tier fit lands on the same fixed point
    std::array<std::pair<CPtD, CPtD>, 3> dpairs{
        std::pair{embed_approx(vertex_A(), M), embed_approx(fig.X, M)},
        std::pair{embed_approx(vertex_B(), M), embed_approx(fig.Y, M)},
        std::pair{embed_approx(vertex_C(), M), embed_approx(fig.Z, M)},
    };
    SimMap<double> fd = fit_similarity(dpairs, SimClass::Indirect);
    CPtD fixd = fixed_point(fd);
    CHECK(approx_eq(fixd.x, to_double(fixed.x)).equal);
    CHECK(approx_eq(fixd.y, to_double(fixed.y)).equal);

    // the invariant axis direction bisects corresponding side directions:
    // reflecting the direction of BC in it gives the direction of YZ
    double theta = axis_direction(fd);
    CPtD b = embed_approx(vertex_B(), M), c = embed_approx(vertex_C(), M);
    CPtD y = embed_approx(fig.Y, M), z = embed_approx(fig.Z, M);
    double ang_bc = std::atan2(c.y - b.y, c.x - b.x);
    double ang_yz = std::atan2(z.y - y.y, z.x - y.x);
    double reflected = 2 * theta - ang_bc;
    double diff = std::remainder(reflected - ang_yz, 2 * 3.14159265358979323846);
    CHECK(std::fabs(diff) < 1e-9);
}

TEST_CASE("Brocard-pivot extras: mirrored pivot, transported pivot, center line") {
    Figure fig = build_kind(PivotKind::Omega);
    SimilarityInfo info = similarity_info(fig);
    REQUIRE(info.has_omega01);
    REQUIRE(info.has_R);

    const Circle circum = circumcircle_of(fig.M);
    CHECK(on_circle(circum, info.omega0)); // mirrored angular position

    // omega1 must be a Brocard point of triangle XYZ itself: compute both from
    // the squared side lengths of XYZ and transport them into reference areals
    const Metric& M = fig.M;
    Rat x2 = dist_sq(fig.Y, fig.Z, M);
    Rat y2 = dist_sq(fig.Z, fig.X, M);
    Rat z2 = dist_sq(fig.X, fig.Y, M);
    ArealMap f = areal_map(fig);
    PtR first = apply(f, PtR{Rat(1) / y2, Rat(1) / z2, Rat(1) / x2});
    PtR second = apply(f, PtR{Rat(1) / z2, Rat(1) / x2, Rat(1) / y2});
    bool is_first = proj_eq(info.omega1, first);
    bool is_second = proj_eq(info.omega1, second);
    CHECK(is_first != is_second);
    // the like-labeled one: the transport carries the defining side ratios over,
    // which is exactly the similarity's side proportionality
    CHECK(is_first);

    // both map endpoints line up with the similarity center
    CHECK(rsgn(det3(info.R, info.omega0, info.omega1)) == 0);

    // in general the center differs from the perspector
    CHECK(!proj_eq(info.R, fig.P));
}

TEST_CASE("seven-point working circle makes the center meet the perspector") {
    Figure fig = build_figure(m131415(), PivotKind::Omega,
                              CircleSpec::named_circle_spec(NamedCircleKind::SevenPoint));
    SimilarityInfo info = similarity_info(fig);
    REQUIRE(info.has_R);
    CHECK(proj_eq(info.R, fig.P));
}

TEST_CASE("six chord midpoints lie on one conic, exactly") {
    for (PivotKind kind :
         {PivotKind::Omega, PivotKind::OmegaPrime, PivotKind::Orthocenter, PivotKind::BH}) {
        CAPTURE(pivot_name(kind));
        SimilarityInfo info = similarity_info(build_kind(kind));
        REQUIRE(info.has_conic);
        CHECK(rsgn(info.conic_residue) == 0);
        // and the conic really passes through the first five defining midpoints
        Figure fig = build_kind(kind);
        CHECK(rsgn(conic_eval(info.mid_conic, midpoint(vertex_A(), fig.X))) == 0);
        CHECK(rsgn(conic_eval(info.mid_conic, midpoint(vertex_B(), fig.Y))) == 0);
        CHECK(rsgn(conic_eval(info.mid_conic, midpoint(vertex_C(), fig.Z))) == 0);
        CHECK(rsgn(conic_eval(info.mid_conic, midpoint(info.D, fig.U))) == 0);
        CHECK(rsgn(conic_eval(info.mid_conic, midpoint(info.E, fig.V))) == 0);
        CHECK(rsgn(conic_eval(info.mid_conic, midpoint(info.F, fig.W))) == 0);
    }
}

TEST_CASE("interior angles and the pivot-angle primitive") {
    const Metric& M = m131415();
    auto [A, B, C] = interior_angles(M);
    CHECK(approx_eq(A + B + C, 3.14159265358979323846).equal);
    CHECK(approx_eq(angle_at(vertex_B(), vertex_A(), vertex_C(), M).value, B).equal);
    CHECK(approx_eq(angle_at(vertex_C(), vertex_B(), vertex_A(), M).value, C).equal);
    // law of cosines cross-check at A
    double want = std::acos(to_double((M.b2 + M.c2 - M.a2)) /
                            (2 * std::sqrt(to_double(M.b2 * M.c2))));
    CHECK(approx_eq(A, want).equal);

    // quadratic-tier overload agrees with the rational one
    PtQ bq = to_quad(vertex_B());
    PtQ aq = to_quad(vertex_A());
    PtQ cq = to_quad(vertex_C());
    CHECK(approx_eq(angle_at(bq, aq, cq, M).value, B).equal);
}
