#include "omega/rational.hpp"
#include "omega/errors.hpp"

#include <cctype>

namespace omega {

Rat rat(long num, long den) {
    if (den == 0) throw DataError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

static bool parse_int_token(const std::string& s, Int& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    out = Int(s, 10);
    return true;
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    Int num, den = 1;
    if (slash == std::string::npos) {
        if (!parse_int_token(s, num)) throw DataError("bad rational literal: '" + s + "'");
    } else {
        if (!parse_int_token(s.substr(0, slash), num) || !parse_int_token(s.substr(slash + 1), den))
            throw DataError("bad rational literal: '" + s + "'");
        if (den == 0) throw DataError("rational with zero denominator: '" + s + "'");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_perfect_square(const Rat& r) {
    if (rsgn(r) < 0) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(r.get_den().get_mpz_t());
}

std::optional<Rat> sqrt_exact(const Rat& r) {
    if (!is_perfect_square(r)) return std::nullopt;
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(n, d); // already canonical: gcd(n,d)^2 | gcd(num,den) = 1
}

} // namespace omega
