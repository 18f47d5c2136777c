#include "omega/approx.hpp"
#include "omega/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace omega {

Tol& global_tol() {
    static Tol t;
    return t;
}

bool tol_from_env() {
    const char* env = std::getenv("OMEGA_TOL");
    if (!env || !*env) return false;
    std::string s(env);
    try {
        auto comma = s.find(',');
        Tol t;
        if (comma == std::string::npos) {
            t.rel = std::stod(s);
            t.abs = t.rel * 1e-2; // keep the default rel:abs ratio
        } else {
            t.rel = std::stod(s.substr(0, comma));
            t.abs = std::stod(s.substr(comma + 1));
        }
        if (!(t.rel > 0) || !(t.abs > 0)) throw DataError("OMEGA_TOL must be positive");
        global_tol() = t;
        return true;
    } catch (const DataError&) {
        throw;
    } catch (...) {
        throw DataError(std::string("cannot parse OMEGA_TOL: '") + env + "'");
    }
}

TolCmp approx_eq(double x, double y, const Tol& t) {
    double resid = std::fabs(x - y);
    double scale = std::max(std::fabs(x), std::fabs(y));
    double rel_thr = t.rel * scale;
    bool rel_fires = rel_thr > t.abs;
    return TolCmp{resid <= std::max(t.abs, rel_thr), resid, rel_fires ? "rel" : "abs"};
}

TolCmp approx_eq(double x, double y) { return approx_eq(x, y, global_tol()); }

TolCmp approx_zero(double x, double scale, const Tol& t) {
    double resid = std::fabs(x);
    double rel_thr = t.rel * std::fabs(scale);
    bool rel_fires = rel_thr > t.abs;
    return TolCmp{resid <= std::max(t.abs, rel_thr), resid, rel_fires ? "rel" : "abs"};
}

TolCmp approx_zero(double x, double scale) { return approx_zero(x, scale, global_tol()); }

Approx approx_of(const Rat& r) { return Approx{to_double(r), global_tol()}; }
Approx approx_of(const Quad& q) { return Approx{to_double(q), global_tol()}; }

} // namespace omega
