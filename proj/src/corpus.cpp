#include "omega/rng.hpp"

#include "omega/errors.hpp"

namespace omega {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
    // run the index through one splitmix step before mixing so that adjacent
    // trials land in unrelated parts of the stream
    Rng ix(trial_index + 0x632be59bd9b4e019ULL);
    return Rng(seed ^ ix.next());
}

const std::vector<CorpusTriangle>& heronian_corpus() {
    static const std::vector<CorpusTriangle> corpus = {
        {13, 14, 15}, {5, 12, 13},  {3, 4, 5},    {9, 10, 17},  {8, 15, 17},
        {4, 13, 15},  {13, 20, 21}, {11, 13, 20}, {7, 15, 20},  {10, 17, 21},
        {12, 17, 25}, {13, 37, 40}, {15, 28, 41}, {25, 29, 36}, {17, 25, 28},
        {20, 21, 29}, {6, 25, 29},  {17, 28, 39}, {25, 34, 39}, {16, 25, 39},
    };
    return corpus;
}

const char* corpus_name(CorpusKind kind) {
    switch (kind) {
        case CorpusKind::Heronian: return "heronian";
        case CorpusKind::Rational: return "rational";
    }
    throw GeomError("corpus_name: bad kind");
}

CorpusKind corpus_from_name(const std::string& name) {
    if (name == "heronian") return CorpusKind::Heronian;
    if (name == "rational") return CorpusKind::Rational;
    throw DataError("unknown corpus '" + name + "'");
}

Metric draw_metric(CorpusKind kind, Rng& rng, long bound) {
    if (kind == CorpusKind::Heronian) {
        const auto& corpus = heronian_corpus();
        const CorpusTriangle& tri = corpus[rng.below(corpus.size())];
        return Metric::from_sides(rat(tri.a, 1), rat(tri.b, 1), rat(tri.c, 1));
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rat a2 = rng.rational_positive(bound);
        Rat b2 = rng.rational_positive(bound);
        Rat c2 = rng.rational_positive(bound);
        Rat gram = 2 * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2;
        if (rsgn(gram) <= 0) continue;
        if (a2 == b2 && b2 == c2) continue; // equilateral has no Brocard geometry to test
        return Metric::from_squares(a2, b2, c2);
    }
    throw GeomError("draw_metric: no valid triangle after 64 attempts");
}

PtR random_point(Rng& rng, long bound) {
    for (;;) {
        PtR p{rng.rational(bound), rng.rational(bound), rng.rational(bound)};
        if (is_zero(p) || rsgn(coord_sum(p)) == 0) continue;
        if (proj_eq(p, vertex_A()) || proj_eq(p, vertex_B()) || proj_eq(p, vertex_C()))
            continue;
        return p;
    }
}

} // namespace omega
