#pragma once
#include "omega/figure.hpp"

#include <string>
#include <vector>

namespace omega {

// The printed coordinate formulas for the Brocard-pivot construction, keyed by
// the chord parameters m, n (X ~ (m/b2, 1, m/a2), Y ~ (n/b2, n/c2, 1)). Each
// evaluator transcribes its source reading literally so the audit can measure
// it against the constructed figure; "repaired_" variants apply the smallest
// symbol-level corrections that reconcile a mismatched reading.
struct MnCtx {
    Rat a2, b2, c2; // squared side lengths
    Rat m, n;

    MnCtx(const Metric& M, Rat m_, Rat n_)
        : a2(M.a2), b2(M.b2), c2(M.c2), m(std::move(m_)), n(std::move(n_)) {}
};

Rat printed_l(const MnCtx& t);
Rat repaired_l(const MnCtx& t);
Conic printed_gamma_conic(const MnCtx& t);
Conic printed_vertex_circle_bc(const Metric& M);
PtR printed_U(const MnCtx& t);
PtR repaired_U(const MnCtx& t);
PtR printed_V(const MnCtx& t);
PtR printed_W(const MnCtx& t);
PtR printed_P(const MnCtx& t);

enum class LedgerStatus { Match, MatchProportional, Mismatch };
const char* ledger_status_name(LedgerStatus s);

struct LedgerEntry {
    std::string id;
    LedgerStatus status = LedgerStatus::Match;
    std::string residual; // exact rational witness, "" when not applicable
    std::string note;
};

// Audits every printed formula against an independently constructed figure.
// Statuses are invariants of the formulas themselves, so they must come out
// identical for every valid (metric, m, n) instance.
std::vector<LedgerEntry> cross_check_formulas(const Metric& M, const Rat& m, const Rat& n);

} // namespace omega
