#include "omega/formulas.hpp"
#include "omega/json_io.hpp"
#include "omega/svg.hpp"
#include "omega/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace omega;

std::vector<Rat> parse_rat_list(const std::string& csv, std::size_t want, const char* what) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(rat_parse(tok));
    if (out.size() != want)
        throw DataError(std::string(what) + ": expected " + std::to_string(want) +
                        " comma-separated rationals, got " + std::to_string(out.size()));
    return out;
}

PtR parse_point(const std::string& csv, const char* what) {
    auto v = parse_rat_list(csv, 3, what);
    PtR p{v[0], v[1], v[2]};
    if (is_zero(p)) throw DataError(std::string(what) + ": all coordinates are zero");
    return p;
}

Metric metric_from_flags(const std::string& sides, const std::string& sides_sq) {
    if (sides.empty() == sides_sq.empty())
        throw UsageError("give exactly one of --sides or --sides-sq");
    if (!sides.empty()) {
        auto v = parse_rat_list(sides, 3, "--sides");
        return Metric::from_sides(v[0], v[1], v[2]);
    }
    auto v = parse_rat_list(sides_sq, 3, "--sides-sq");
    return Metric::from_squares(v[0], v[1], v[2]);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << content;
}

std::string read_input(const std::string& path) {
    std::stringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw DataError("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

struct ConstructArgs {
    std::string sides, sides_sq, pivot = "omega", pivot_point;
    std::string mn, named;
    std::vector<std::string> through;
    std::string out, svg;
};

int cmd_construct(const ConstructArgs& a) {
    Metric M = metric_from_flags(a.sides, a.sides_sq);
    PivotKind kind = pivot_from_name(a.pivot);

    int spec_flags = (!a.mn.empty()) + (!a.through.empty()) + (!a.named.empty());
    if (spec_flags != 1) throw UsageError("give exactly one of --mn, --through, --named");
    CircleSpec spec;
    if (!a.mn.empty()) {
        auto v = parse_rat_list(a.mn, 2, "--mn");
        spec = CircleSpec::mn_params(v[0], v[1]);
    } else if (!a.through.empty()) {
        spec = CircleSpec::through(parse_point(a.through[0], "--through"),
                                   parse_point(a.through[1], "--through"));
    } else {
        spec = CircleSpec::named_circle_spec(named_circle_from_name(a.named));
    }

    PtR custom;
    const PtR* custom_ptr = nullptr;
    if (kind == PivotKind::CustomJ) {
        if (a.pivot_point.empty()) throw UsageError("--pivot custom requires --pivot-point");
        custom = parse_point(a.pivot_point, "--pivot-point");
        custom_ptr = &custom;
    } else if (!a.pivot_point.empty()) {
        throw UsageError("--pivot-point only applies to --pivot custom");
    }

    Figure fig = build_figure(M, kind, spec, custom_ptr);
    write_output(a.out, figure_json(fig).dump(2) + "\n");
    if (!a.svg.empty()) write_output(a.svg, render_svg(fig));
    return 0;
}

struct VerifyArgs {
    std::string properties = "all";
    int trials = 100;
    std::uint64_t seed = 1;
    std::string corpus = "heronian";
    long bound = 1000;
    bool serial = false;
    std::string out;
};

int cmd_verify(const VerifyArgs& a) {
    std::vector<PropertyId> ids;
    if (a.properties == "all") {
        ids = all_properties();
    } else {
        std::stringstream ss(a.properties);
        std::string tok;
        while (std::getline(ss, tok, ',')) ids.push_back(property_from_name(tok));
        if (ids.empty()) throw UsageError("--properties: empty list");
    }
    TrialSpec spec;
    spec.seed = a.seed;
    spec.source = corpus_from_name(a.corpus);
    spec.count = a.trials;
    spec.rat_bound = a.bound;

    Report report = fuzz_all(ids, spec, !a.serial);
    write_output(a.out, report_json(report).dump(2) + "\n");
    return exit_code_for(report);
}

struct CrossCheckArgs {
    std::string sides, sides_sq;
    std::string mn = "2,3";
    std::string out;
};

int cmd_cross_check(const CrossCheckArgs& a) {
    Metric M = metric_from_flags(a.sides, a.sides_sq);
    auto v = parse_rat_list(a.mn, 2, "--mn");
    auto entries = cross_check_formulas(M, v[0], v[1]);
    write_output(a.out, ledger_json(entries).dump(2) + "\n");
    return 0; // statuses are findings, not failures
}

struct RenderArgs {
    std::string in, out;
};

int cmd_render(const RenderArgs& a) {
    Figure fig = figure_from_json(parse_json(read_input(a.in)));
    write_output(a.out, render_svg(fig));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of pivot-circle figures"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand(
        "construct", "build a figure and emit it as exact JSON (optionally SVG)");
    construct->add_option("--sides", ca.sides, "side lengths a,b,c as rationals");
    construct->add_option("--sides-sq", ca.sides_sq, "squared side lengths a2,b2,c2");
    construct->add_option("--pivot", ca.pivot,
                          "omega|omega_prime|orthocenter|aH|bH|cH|custom")
        ->capture_default_str();
    construct->add_option("--pivot-point", ca.pivot_point, "areal x,y,z for --pivot custom");
    construct->add_option("--mn", ca.mn, "chord parameters m,n (Brocard pivot)");
    construct->add_option("--through", ca.through, "two extra circle points, each x,y,z")
        ->expected(2);
    construct->add_option("--named", ca.named, "circumcircle|seven-point|orthocentroidal");
    construct->add_option("--out", ca.out, "output path for the figure JSON (default stdout)");
    construct->add_option("--svg", ca.svg, "also render an SVG to this path");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "fuzz the figure properties");
    verify->add_option("--properties", va.properties, "all or a comma-separated list")
        ->capture_default_str();
    verify->add_option("--trials", va.trials, "trials per property")->capture_default_str();
    verify->add_option("--seed", va.seed, "base seed")->capture_default_str();
    verify->add_option("--corpus", va.corpus, "heronian|rational")->capture_default_str();
    verify->add_option("--bound", va.bound, "numerator/denominator bound for random draws")
        ->capture_default_str();
    verify->add_flag("--serial", va.serial, "disable the parallel trial loop");
    verify->add_option("--out", va.out, "output path for the report JSON (default stdout)");

    CrossCheckArgs xa;
    CLI::App* cross = app.add_subcommand(
        "cross-check", "audit the printed coordinate formulas against the construction");
    cross->add_option("--sides", xa.sides, "side lengths a,b,c as rationals");
    cross->add_option("--sides-sq", xa.sides_sq, "squared side lengths a2,b2,c2");
    cross->add_option("--mn", xa.mn, "chord parameters m,n")->capture_default_str();
    cross->add_option("--out", xa.out, "output path for the ledger JSON (default stdout)");

    RenderArgs ra;
    CLI::App* render = app.add_subcommand("render", "render a figure JSON as SVG");
    render->add_option("--in", ra.in, "figure JSON path (default stdin)");
    render->add_option("--out", ra.out, "SVG output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64; // any parse failure is a usage error
    }

    try {
        omega::tol_from_env();
        if (construct->parsed()) return cmd_construct(ca);
        if (verify->parsed()) return cmd_verify(va);
        if (cross->parsed()) return cmd_cross_check(xa);
        if (render->parsed()) return cmd_render(ra);
        throw omega::UsageError("no subcommand given");
    } catch (const omega::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const omega::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
