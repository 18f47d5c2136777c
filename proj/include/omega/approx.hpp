#pragma once
#include "omega/quadext.hpp"
#include "omega/rational.hpp"

namespace omega {

//! global tolerance policy for the approximate tier
struct Tol {
    double rel = 1e-10;
    double abs = 1e-12;
};

//! mutable global policy; fix it before starting parallel runs
Tol& global_tol();

//! apply OMEGA_TOL ("rel" or "rel,abs") if set; returns true when it overrode
bool tol_from_env();

//! outcome of a toleranced comparison, recording which bound fired
struct TolCmp {
    bool equal;
    double resid;       // |x - y|
    const char* bound;  // "abs" or "rel": the larger (deciding) threshold
};

TolCmp approx_eq(double x, double y);
TolCmp approx_eq(double x, double y, const Tol& t);
//! |x| against the policy, with an explicit magnitude scale for the rel bound
TolCmp approx_zero(double x, double scale = 1.0);
TolCmp approx_zero(double x, double scale, const Tol& t);

//! toleranced real: a value plus the policy under which it was produced
struct Approx {
    double value = 0.0;
    Tol tol;
};

Approx approx_of(const Rat& r);
Approx approx_of(const Quad& q);

} // namespace omega
