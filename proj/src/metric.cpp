#include "omega/metric.hpp"
#include "omega/errors.hpp"

namespace omega {

Metric Metric::from_squares(const Rat& a2, const Rat& b2, const Rat& c2) {
    if (rsgn(a2) <= 0 || rsgn(b2) <= 0 || rsgn(c2) <= 0)
        throw DataError("squared side lengths must be positive");
    Metric m{a2, b2, c2};
    if (rsgn(m.sixteen_area_sq()) <= 0)
        throw DataError("degenerate triangle: squared sides violate the strict triangle inequality");
    return m;
}

Metric Metric::from_sides(const Rat& a, const Rat& b, const Rat& c) {
    if (rsgn(a) <= 0 || rsgn(b) <= 0 || rsgn(c) <= 0)
        throw DataError("side lengths must be positive");
    return from_squares(a * a, b * b, c * c);
}

Rat Metric::sixteen_area_sq() const {
    return 2 * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2;
}

bool Metric::embeddable() const {
    return is_perfect_square(a2) && is_perfect_square(sixteen_area_sq());
}

Rat Metric::side_a() const {
    auto s = sqrt_exact(a2);
    if (!s) throw DataError("side a is irrational; exact embedding unavailable");
    return *s;
}

Rat Metric::area() const {
    auto s = sqrt_exact(sixteen_area_sq());
    if (!s) throw DataError("area is irrational; exact embedding unavailable");
    return *s / 4;
}

bool operator==(const Metric& u, const Metric& v) {
    return u.a2 == v.a2 && u.b2 == v.b2 && u.c2 == v.c2;
}

} // namespace omega
