#include "omega/verifier.hpp"

#include "omega/wood.hpp"

#include <cmath>
#include <map>

namespace omega {

namespace {

struct PropRow {
    PropertyId id;
    const char* name;
};
constexpr PropRow kProps[] = {
    {PropertyId::XYZSimilarOmega, "xyz-similar-omega"},
    {PropertyId::XYZSimilarOmegaPrime, "xyz-similar-omega-prime"},
    {PropertyId::XYZSimilarHagge, "xyz-similar-hagge"},
    {PropertyId::XYZDirectBH, "xyz-direct-bh"},
    {PropertyId::PerspectorExists, "perspector-exists"},
    {PropertyId::AxisCollinear, "axis-collinear"},
    {PropertyId::SOnCircumcircle, "s-on-circumcircle"},
    {PropertyId::SOnCircumcircleBH, "s-on-circumcircle-bh"},
    {PropertyId::MidpointConic, "midpoint-conic"},
    {PropertyId::HaggeRequalsP, "hagge-r-equals-p"},
    {PropertyId::SevenPointRequalsP, "seven-point-r-equals-p"},
    {PropertyId::AngleFactsOmega, "angle-facts-omega"},
    {PropertyId::AngleFactsOmegaPrime, "angle-facts-omega-prime"},
    {PropertyId::AngleFactsBH, "angle-facts-bh"},
    {PropertyId::WoodRotation, "wood-rotation"},
    {PropertyId::APDCollinearHagge, "apd-collinear-hagge"},
    {PropertyId::NegativeRandomJ, "negative-random-j"},
};

} // namespace

const char* property_name(PropertyId id) {
    for (const auto& row : kProps)
        if (row.id == id) return row.name;
    throw GeomError("property_name: bad id");
}

PropertyId property_from_name(const std::string& name) {
    for (const auto& row : kProps)
        if (name == row.name) return row.id;
    throw DataError("unknown property '" + name + "'");
}

const std::vector<PropertyId>& all_properties() {
    static const std::vector<PropertyId> ids = [] {
        std::vector<PropertyId> v;
        for (const auto& row : kProps) v.push_back(row.id);
        return v;
    }();
    return ids;
}

std::array<double, 3> pivot_angle_targets(PivotKind kind, const Metric& M) {
    auto [A, B, C] = interior_angles(M);
    const double pi = 4.0 * std::atan(1.0);
    switch (kind) { // (B-pivot-C, C-pivot-A, A-pivot-B)
        case PivotKind::Omega: return {pi - C, pi - A, pi - B};
        case PivotKind::OmegaPrime: return {pi - B, pi - C, pi - A};
        case PivotKind::Orthocenter: return {pi - A, pi - B, pi - C};
        case PivotKind::AH: return {pi - A, pi - C, pi - B};
        case PivotKind::BH: return {pi - C, pi - B, pi - A};
        case PivotKind::CH: return {pi - B, pi - A, pi - C};
        case PivotKind::CustomJ: break;
    }
    throw GeomError("pivot_angle_targets: no targets for this pivot");
}

namespace {

// --- drawing helpers -------------------------------------------------------

const PivotKind kMedianPivots[] = {PivotKind::AH, PivotKind::BH, PivotKind::CH};
const PivotKind kSimilarityPivots[] = {PivotKind::Omega,       PivotKind::OmegaPrime,
                                       PivotKind::Orthocenter, PivotKind::AH,
                                       PivotKind::BH,          PivotKind::CH};
const PivotKind kAllPivots[] = {PivotKind::Omega,  PivotKind::OmegaPrime,
                                PivotKind::Orthocenter, PivotKind::AH,
                                PivotKind::BH,          PivotKind::CH,
                                PivotKind::CustomJ};

CircleSpec draw_spec(PivotKind kind, Rng& rng, long bound) {
    if (kind == PivotKind::Omega && rng.below(2) == 0)
        return CircleSpec::mn_params(rng.rational_nonzero(bound), rng.rational_nonzero(bound));
    return CircleSpec::through(random_point(rng, bound), random_point(rng, bound));
}

struct Draw {
    Metric M;
    PivotKind kind;
    PtR custom; // only meaningful for CustomJ
    CircleSpec spec;
};

Json draw_witness(const Draw& d) {
    Json j;
    j["metric"] = metric_json(d.M);
    j["pivot_kind"] = pivot_name(d.kind);
    if (d.kind == PivotKind::CustomJ) j["pivot"] = pt_json(d.custom);
    switch (d.spec.kind) {
        case CircleSpec::Kind::MN:
            j["circle"] = Json{{"m", rat_json(d.spec.m)}, {"n", rat_json(d.spec.n)}};
            break;
        case CircleSpec::Kind::ThroughTwo:
            j["circle"] = Json{{"through", Json::array({pt_json(d.spec.P), pt_json(d.spec.Q)})}};
            break;
        case CircleSpec::Kind::Named:
            j["circle"] = Json{{"named", named_circle_name(d.spec.named)}};
            break;
    }
    return j;
}

Figure build_draw(const Draw& d) {
    return build_figure(d.M, d.kind, d.spec, d.kind == PivotKind::CustomJ ? &d.custom : nullptr);
}

template <class Pick>
Draw make_draw(Rng& rng, CorpusKind source, long bound, Pick pick_kind) {
    Draw d{draw_metric(source, rng, bound), pick_kind(rng), PtR{}, CircleSpec{}};
    if (d.kind == PivotKind::CustomJ) d.custom = random_point(rng, bound);
    d.spec = draw_spec(d.kind, rng, bound);
    return d;
}

// --- per-property checks ---------------------------------------------------

struct CheckResult {
    bool pass = true;
    std::string detail;
    Json extra; // merged into the witness on failure
};

CheckResult check_verdict(const Figure& fig, SimClass want) {
    SimilarityInfo info = similarity_info(fig);
    if (info.verdict.cls == want) return {};
    return {false,
            std::string("similarity verdict is ") + sim_class_name(info.verdict.cls) +
                ", expected " + sim_class_name(want),
            figure_json(fig)};
}

CheckResult check_axis(const Figure& fig) {
    bool ok = rsgn(incidence(fig.axis, fig.axis_mA)) == 0 &&
              rsgn(incidence(fig.axis, fig.axis_mB)) == 0 &&
              rsgn(incidence(fig.axis, fig.axis_mC)) == 0 &&
              rsgn(incidence(fig.axis, fig.P)) == 0 &&
              rsgn(det3(fig.axis_mA, fig.axis_mB, fig.axis_mC)) == 0;
    if (ok) return {};
    return {false, "axis incidences not exactly zero", figure_json(fig)};
}

CheckResult check_s_residue(const Figure& fig) {
    if (rsgn(fig.s_circum_residue) == 0) return {};
    Json extra = figure_json(fig);
    extra["counterexample_candidate"] = true;
    return {false, "S misses the circumcircle: counterexample candidate", extra};
}

CheckResult check_conic(const Figure& fig) {
    SimilarityInfo info = similarity_info(fig);
    if (!info.has_conic) return {false, "midpoint conic undefined", figure_json(fig)};
    if (rsgn(info.conic_residue) == 0) return {};
    Json extra = figure_json(fig);
    extra["conic_residue"] = rat_json(info.conic_residue);
    return {false, "sixth midpoint misses the conic", extra};
}

CheckResult check_r_equals_p(const Figure& fig) {
    SimilarityInfo info = similarity_info(fig);
    if (!info.has_R) return {false, "similarity has no fixed point", figure_json(fig)};
    if (proj_eq(info.R, fig.P)) return {};
    Json extra = figure_json(fig);
    extra["R"] = pt_json(info.R);
    return {false, "similarity center differs from the perspector", extra};
}

CheckResult check_angles(const Figure& fig) {
    auto want = pivot_angle_targets(fig.kind, fig.M);
    const PtR* verts[3][2] = {{&vertex_B(), &vertex_C()},
                              {&vertex_C(), &vertex_A()},
                              {&vertex_A(), &vertex_B()}};
    const double pi = 4.0 * std::atan(1.0);
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
        Approx got = angle_at(fig.pivot, *verts[i][0], *verts[i][1], fig.M);
        // the facts are directed-angle statements (mod pi): the unsigned
        // measurement lands on the supplement when the pivot crosses to the
        // other arc, which happens for obtuse metrics
        double dev = std::min(std::fabs(got.value - want[i]),
                              std::fabs(got.value - (pi - want[i])));
        worst = std::max(worst, dev);
    }
    if (worst <= kAngleTol) return {};
    Json extra = figure_json(fig);
    extra["angle_deviation"] = worst;
    return {false, "pivot angle fact violated", extra};
}

CheckResult check_apd(const Figure& fig) {
    SimilarityInfo info = similarity_info(fig);
    bool ok = rsgn(det3(vertex_A(), fig.P, info.D)) == 0 &&
              rsgn(det3(vertex_B(), fig.P, info.E)) == 0 &&
              rsgn(det3(vertex_C(), fig.P, info.F)) == 0;
    if (ok) return {};
    Json extra = figure_json(fig);
    extra["D"] = pt_json(info.D);
    extra["E"] = pt_json(info.E);
    extra["F"] = pt_json(info.F);
    return {false, "A-P-D collinearity fails", extra};
}

CheckResult check_wood(const Figure& fig) {
    WoodResult wood = jk_and_wood(fig);
    if (!wood.ok) throw GeomError("no real chord within the enlargement bound"); // redraw
    // the chord ends and the projected triangle must sit on the circumcircle
    // exactly, quadratic tier included
    const Circle circ = circumcircle_of(fig.M);
    for (const PtQ* p : {&wood.J, &wood.K, &wood.A1, &wood.B1, &wood.C1})
        if (!on_circle(circ, *p))
            return {false, "chord or projection left the circumcircle", figure_json(fig)};
    RotationCheck rc = rotation_about_O_check(fig, wood);
    if (rc.radii_exact && rc.angles_agree) return {};
    Json extra = figure_json(fig);
    extra["radii_exact"] = rc.radii_exact;
    extra["angle_deviation"] = rc.max_dev;
    return {false, "projected triangle is not a rotation of the reference", extra};
}

} // namespace

TrialOutcome run_property(PropertyId id, std::uint64_t seed, std::uint64_t index,
                          CorpusKind source, long rat_bound) {
    // property tag mixed into the stream so different properties see different
    // draws for the same (seed, index)
    Rng rng = trial_rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(id) + 1)),
                        index);
    auto fixed = [](PivotKind k) { return [k](Rng&) { return k; }; };
    auto among = [](const PivotKind* list, std::uint64_t n) {
        return [list, n](Rng& r) { return list[r.below(n)]; };
    };

    TrialOutcome out;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Draw d;
        try {
            switch (id) {
                case PropertyId::XYZSimilarOmega:
                    d = make_draw(rng, source, rat_bound, fixed(PivotKind::Omega));
                    break;
                case PropertyId::XYZSimilarOmegaPrime:
                    d = make_draw(rng, source, rat_bound, fixed(PivotKind::OmegaPrime));
                    break;
                case PropertyId::XYZSimilarHagge:
                case PropertyId::HaggeRequalsP:
                case PropertyId::APDCollinearHagge:
                    d = make_draw(rng, source, rat_bound, fixed(PivotKind::Orthocenter));
                    break;
                case PropertyId::XYZDirectBH:
                case PropertyId::SOnCircumcircleBH:
                case PropertyId::AngleFactsBH:
                case PropertyId::WoodRotation:
                    d = make_draw(rng, source, rat_bound, among(kMedianPivots, 3));
                    break;
                case PropertyId::PerspectorExists:
                case PropertyId::AxisCollinear:
                case PropertyId::SOnCircumcircle:
                    d = make_draw(rng, source, rat_bound, among(kAllPivots, 7));
                    break;
                case PropertyId::MidpointConic:
                    d = make_draw(rng, source, rat_bound, among(kSimilarityPivots, 6));
                    break;
                case PropertyId::SevenPointRequalsP:
                    d = make_draw(rng, source, rat_bound, fixed(PivotKind::Omega));
                    d.spec = CircleSpec::named_circle_spec(NamedCircleKind::SevenPoint);
                    break;
                case PropertyId::AngleFactsOmega:
                    d = make_draw(rng, source, rat_bound, fixed(PivotKind::Omega));
                    break;
                case PropertyId::AngleFactsOmegaPrime:
                    d = make_draw(rng, source, rat_bound, fixed(PivotKind::OmegaPrime));
                    break;
                case PropertyId::NegativeRandomJ:
                    d = make_draw(rng, source, rat_bound, fixed(PivotKind::CustomJ));
                    break;
            }

            Figure fig = build_draw(d);
            CheckResult res;
            switch (id) {
                case PropertyId::XYZSimilarOmega:
                case PropertyId::XYZSimilarOmegaPrime:
                case PropertyId::XYZSimilarHagge:
                    res = check_verdict(fig, SimClass::Indirect);
                    break;
                case PropertyId::XYZDirectBH:
                    res = check_verdict(fig, SimClass::Direct);
                    break;
                case PropertyId::NegativeRandomJ:
                    res = check_verdict(fig, SimClass::None);
                    break;
                case PropertyId::PerspectorExists:
                    // concurrency is asserted exactly during construction;
                    // reaching this point is the pass
                    break;
                case PropertyId::AxisCollinear:
                    res = check_axis(fig);
                    break;
                case PropertyId::SOnCircumcircle:
                case PropertyId::SOnCircumcircleBH:
                    res = check_s_residue(fig);
                    break;
                case PropertyId::MidpointConic:
                    res = check_conic(fig);
                    break;
                case PropertyId::HaggeRequalsP:
                case PropertyId::SevenPointRequalsP:
                    res = check_r_equals_p(fig);
                    break;
                case PropertyId::AngleFactsOmega:
                case PropertyId::AngleFactsOmegaPrime:
                case PropertyId::AngleFactsBH:
                    res = check_angles(fig);
                    break;
                case PropertyId::WoodRotation:
                    res = check_wood(fig);
                    break;
                case PropertyId::APDCollinearHagge:
                    res = check_apd(fig);
                    break;
            }

            if (res.pass) {
                out.status = TrialStatus::Pass;
                out.detail.clear();
                out.witness = Json();
            } else {
                out.status = TrialStatus::Fail;
                out.detail = res.detail;
                out.witness = draw_witness(d);
                out.witness["trial"] = Json{{"seed", seed}, {"index", index}};
                if (!res.extra.is_null())
                    for (auto& [k, v] : res.extra.items()) out.witness[k] = v;
            }
            return out;
        } catch (const ClaimError& e) {
            out.status = TrialStatus::Fail;
            out.detail = e.what();
            out.witness = draw_witness(d);
            out.witness["trial"] = Json{{"seed", seed}, {"index", index}};
            return out;
        } catch (const UsageError&) {
            throw; // a spec/pivot combination the caller must fix, not a redraw
        } catch (const std::exception& e) {
            out.status = TrialStatus::Skip;
            out.detail = e.what(); // degenerate draw: try again from the stream
        }
    }
    return out;
}

PropertyRun fuzz(PropertyId id, const TrialSpec& spec, bool parallel) {
    if (spec.count <= 0) throw UsageError("trial count must be positive");
    std::vector<TrialOutcome> outs(static_cast<std::size_t>(spec.count));

    auto one = [&](int i) {
        try {
            outs[static_cast<std::size_t>(i)] =
                run_property(id, spec.seed, static_cast<std::uint64_t>(i), spec.source,
                             spec.rat_bound);
        } catch (const std::exception& e) {
            outs[static_cast<std::size_t>(i)] =
                TrialOutcome{TrialStatus::Skip, e.what(), Json()};
        }
    };

    if (parallel) {
#ifdef OMEGA_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < spec.count; ++i) one(i);
    } else {
        for (int i = 0; i < spec.count; ++i) one(i);
    }

    PropertyRun run;
    run.id = id;
    run.total = spec.count;
    for (int i = 0; i < spec.count; ++i) { // index order: schedule-independent
        const TrialOutcome& o = outs[static_cast<std::size_t>(i)];
        switch (o.status) {
            case TrialStatus::Pass: ++run.passed; break;
            case TrialStatus::Fail:
                ++run.failed;
                run.failures.emplace_back(i, o);
                break;
            case TrialStatus::Skip: ++run.skipped; break;
        }
    }
    if (2 * run.skipped > run.total)
        throw DataError(std::string("fuzz aborted: over half the trials of ") +
                        property_name(id) + " skipped (corpus unsuitable)");
    return run;
}

Report fuzz_all(const std::vector<PropertyId>& ids, const TrialSpec& spec, bool parallel) {
    Report report;
    report.spec = spec;
    for (PropertyId id : ids) report.runs.push_back(fuzz(id, spec, parallel));
    return report;
}

Json report_json(const Report& report) {
    Json j;
    j["spec"] = Json{{"seed", report.spec.seed},
                     {"corpus", corpus_name(report.spec.source)},
                     {"count", report.spec.count},
                     {"rat_bound", report.spec.rat_bound}};
    Json props = Json::array();
    for (const PropertyRun& run : report.runs) {
        Json row;
        row["id"] = property_name(run.id);
        row["total"] = run.total;
        row["passed"] = run.passed;
        row["failed"] = run.failed;
        row["skipped"] = run.skipped;
        Json fails = Json::array();
        for (const auto& [idx, out] : run.failures) {
            Json f;
            f["trial"] = idx;
            f["detail"] = out.detail;
            f["witness"] = out.witness;
            fails.push_back(std::move(f));
        }
        row["failures"] = std::move(fails);
        props.push_back(std::move(row));
    }
    j["properties"] = std::move(props);
    j["exit_code"] = exit_code_for(report);
    return j;
}

int exit_code_for(const Report& report) {
    int code = 0;
    for (const PropertyRun& run : report.runs) {
        if (run.failed == 0) continue;
        if (run.id == PropertyId::SOnCircumcircle || run.id == PropertyId::SOnCircumcircleBH)
            return 2;
        code = 1;
    }
    return code;
}

} // namespace omega
