#pragma once
#include "omega/rational.hpp"

namespace omega {

// Squared side lengths (a2, b2, c2) = (BC^2, CA^2, AB^2). Every metric quantity
// in the engine is a polynomial in these three rationals.
struct Metric {
    Rat a2, b2, c2;

    static Metric from_squares(const Rat& a2, const Rat& b2, const Rat& c2);
    static Metric from_sides(const Rat& a, const Rat& b, const Rat& c);

    //! 16 * area^2 = 2(a2 b2 + b2 c2 + c2 a2) - a2^2 - b2^2 - c2^2 (positive by invariant)
    Rat sixteen_area_sq() const;

    //! true iff side a and the area are both rational, so the Cartesian
    //! embedding B=(0,0), C=(a,0) stays in the exact tier
    bool embeddable() const;

    //! side length a (throws unless a2 is a perfect square)
    Rat side_a() const;
    //! exact area (throws unless embeddable)
    Rat area() const;
};

bool operator==(const Metric& u, const Metric& v);

} // namespace omega
