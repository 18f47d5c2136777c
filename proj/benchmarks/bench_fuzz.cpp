// Compares the OpenMP trial loop against the serial reference on the heaviest
// property and confirms the two produce byte-identical reports. Exits nonzero
// on divergence, since the parallel loop is only valid if it is undetectable.
#include "omega/verifier.hpp"

#ifdef OMEGA_HAVE_OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <string>

using namespace omega;

namespace {

double timed(PropertyId id, const TrialSpec& spec, bool parallel, std::string& dump) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = fuzz_all({id}, spec, parallel);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    dump = report_json(rep).dump(2);
    return dt;
}

} // namespace

int main(int argc, char** argv) {
    TrialSpec spec;
    spec.seed = 101;
    spec.count = argc > 1 ? std::atoi(argv[1]) : 400;
    if (spec.count <= 0) {
        std::fprintf(stderr, "usage: %s [trials]\n", argv[0]);
        return 64;
    }

    int threads = 1;
#ifdef OMEGA_HAVE_OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("trials per property: %d, threads: %d\n", spec.count, threads);
    std::printf("%-24s %10s %10s %8s %s\n", "property", "serial", "parallel", "speedup",
                "reports");

    bool diverged = false;
    for (PropertyId id : {PropertyId::SOnCircumcircle, PropertyId::WoodRotation,
                          PropertyId::XYZSimilarOmega}) {
        std::string serial_dump, parallel_dump;
        double ts = timed(id, spec, false, serial_dump);
        double tp = timed(id, spec, true, parallel_dump);
        bool same = serial_dump == parallel_dump;
        diverged = diverged || !same;
        std::printf("%-24s %9.3fs %9.3fs %7.2fx %s\n", property_name(id), ts, tp,
                    tp > 0 ? ts / tp : 0.0, same ? "identical" : "DIVERGED");
    }
    return diverged ? 1 : 0;
}
