#include "omega/quadext.hpp"
#include "omega/errors.hpp"

#include <cmath>

namespace omega {

Quad::Quad(Rat a_, Rat b_, Rat d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
    if (rsgn(b) == 0) {
        d = 0;
        return;
    }
    if (rsgn(d) < 0) throw GeomError("negative radicand");
    if (auto s = sqrt_exact(d)) { // fold rational square roots away
        a += b * *s;
        b = 0;
        d = 0;
    }
}

// The shared radicand of two operands; a purely rational side adopts the other's d.
static const Rat& common_d(const Quad& x, const Quad& y) {
    if (x.is_rational()) return y.d;
    if (y.is_rational()) return x.d;
    if (x.d != y.d) throw GeomError("mismatched radicands");
    return x.d;
}

Quad operator+(const Quad& x, const Quad& y) { return Quad(x.a + y.a, x.b + y.b, common_d(x, y)); }
Quad operator-(const Quad& x, const Quad& y) { return Quad(x.a - y.a, x.b - y.b, common_d(x, y)); }
Quad operator-(const Quad& x) { return Quad(-x.a, -x.b, x.d); }

Quad operator*(const Quad& x, const Quad& y) {
    const Rat& d = common_d(x, y);
    return Quad(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
}

Quad operator/(const Quad& x, const Quad& y) {
    Rat norm = y.a * y.a - y.b * y.b * y.d; // zero only for y == 0 in canonical form
    if (rsgn(norm) == 0) throw GeomError("division by zero");
    Quad inv(y.a / norm, -y.b / norm, y.d);
    return x * inv;
}

bool operator==(const Quad& x, const Quad& y) {
    if (x.is_rational() != y.is_rational()) return false;
    if (x.is_rational()) return x.a == y.a;
    if (x.d != y.d) throw GeomError("mismatched radicands");
    return x.a == y.a && x.b == y.b;
}

int qsgn(const Quad& x) {
    int sa = rsgn(x.a), sb = rsgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: |a| vs |b|*sqrt(d) decides, i.e. a^2 vs b^2 d
    int cmp = rsgn(x.a * x.a - x.b * x.b * x.d);
    if (cmp == 0) return 0;
    return cmp > 0 ? sa : sb;
}

Quad quad_sqrt(const Rat& d) {
    if (rsgn(d) < 0) throw GeomError("negative radicand");
    return Quad(Rat(0), Rat(1), d);
}

double to_double(const Quad& x) { return to_double(x.a) + to_double(x.b) * std::sqrt(to_double(x.d)); }

} // namespace omega
