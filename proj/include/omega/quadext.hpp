#pragma once
#include "omega/rational.hpp"

namespace omega {

// Element a + b*sqrt(d) of a quadratic extension of the rationals.
// Exactly one radicand d is live per computation context (it comes from one
// discriminant); nested or mixed radicals are out of scope by design.
// Canonical form: b == 0 implies d == 0, and d is never a perfect square.
struct Quad {
    Rat a, b, d;

    Quad() : a(0), b(0), d(0) {}
    Quad(const Rat& value) : a(value), b(0), d(0) {} // NOLINT: implicit on purpose
    Quad(long value) : a(value), b(0), d(0) {}       // NOLINT
    Quad(Rat a_, Rat b_, Rat d_);

    bool is_rational() const { return rsgn(b) == 0; }
    Quad conj() const { return is_rational() ? *this : Quad(a, -b, d); }
};

Quad operator+(const Quad& x, const Quad& y);
Quad operator-(const Quad& x, const Quad& y);
Quad operator-(const Quad& x);
Quad operator*(const Quad& x, const Quad& y);
Quad operator/(const Quad& x, const Quad& y);
bool operator==(const Quad& x, const Quad& y);
inline bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

//! exact sign of a + b*sqrt(d) by case analysis (compares a^2 against b^2 d)
int qsgn(const Quad& x);

//! sqrt(d) as a Quad; folds to a rational when d is a perfect square
Quad quad_sqrt(const Rat& d);

double to_double(const Quad& x);

} // namespace omega
