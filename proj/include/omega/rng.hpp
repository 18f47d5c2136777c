#pragma once
#include "omega/metric.hpp"
#include "omega/point.hpp"

#include <cstdint>
#include <vector>

namespace omega {

// Deterministic splitmix64 stream. Each fuzz trial gets its own stream keyed
// by (seed, trial index) so results are independent of scheduling order.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    //! uniform in [0, bound); rejection sampling keeps it unbiased and
    //! platform-independent (distribution templates are not portable)
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    long range(long lo, long hi) { // inclusive ends
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    Rat rational(long bound) { // num in [-bound, bound], den in [1, bound]
        return rat(range(-bound, bound), range(1, bound));
    }

    Rat rational_nonzero(long bound) {
        for (;;) {
            Rat v = rational(bound);
            if (rsgn(v) != 0) return v;
        }
    }

    Rat rational_positive(long bound) {
        return rat(range(1, bound), range(1, bound));
    }
};

Rng trial_rng(std::uint64_t seed, std::uint64_t trial_index);

struct CorpusTriangle {
    long a, b, c;
};
//! scalene integer-sided triangles with integer area, so every metric here
//! embeds exactly; a few are right triangles (orthocenter at a vertex)
const std::vector<CorpusTriangle>& heronian_corpus();

enum class CorpusKind { Heronian, Rational };
const char* corpus_name(CorpusKind kind);
CorpusKind corpus_from_name(const std::string& name);

//! Heronian: uniform pick from the corpus. Rational: random squared sides
//! with bound-limited numerators/denominators, redrawn until nondegenerate.
Metric draw_metric(CorpusKind kind, Rng& rng, long bound = 1000);

//! finite random point (coordinate sum nonzero), not a vertex
PtR random_point(Rng& rng, long bound = 1000);

} // namespace omega
