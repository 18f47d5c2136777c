#pragma once
#include <gmpxx.h>
#include <optional>
#include <string>

namespace omega {

// Exact arbitrary-precision rational. Arbitrary precision is load-bearing:
// intermediate coefficients in the circle/conic solves routinely reach
// hundreds of digits, so fixed-width overflow would be a correctness bug.
using Rat = mpq_class;
using Int = mpz_class;

//! canonical rational from machine ints (gcd-reduced, positive denominator)
Rat rat(long num, long den = 1);

//! parse "num/den" or "num"; canonicalizes; rejects zero denominators
Rat rat_parse(const std::string& s);

//! serialize in canonical "num/den" form (denominator always present)
std::string rat_str(const Rat& r);

//! exact sign: -1, 0, +1
inline int rsgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }

//! true iff r is the square of a rational (r >= 0 and num/den both squares)
bool is_perfect_square(const Rat& r);

//! exact square root when r is a perfect square, nullopt otherwise
std::optional<Rat> sqrt_exact(const Rat& r);

//! re-normalize in place (idempotent; arithmetic results are already canonical)
inline Rat& normalize(Rat& r) { r.canonicalize(); return r; }

inline double to_double(const Rat& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

} // namespace omega
