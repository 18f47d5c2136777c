#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omega/approx.hpp"
#include "omega/errors.hpp"
#include "omega/quadext.hpp"
#include "omega/rational.hpp"

#include <cstdlib>

using namespace omega;

TEST_CASE("rational normalization is canonical and idempotent") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat(0, 7) == rat(0, 1));
    Rat r = rat(2, 4);
    CHECK(normalize(r) == rat(1, 2));
    CHECK(normalize(r) == rat(1, 2)); // idempotent
    CHECK(rat(0, 7).get_den() == 1);
    CHECK_THROWS_AS(rat(1, 0), DataError);
}

TEST_CASE("rational parse and serialize round-trip") {
    CHECK(rat_parse("2/4") == rat(1, 2));
    CHECK(rat_parse("-3/6") == rat(-1, 2));
    CHECK(rat_parse("3/-6") == rat(-1, 2));
    CHECK(rat_parse("7") == rat(7));
    CHECK(rat_str(rat(1, 2)) == "1/2");
    CHECK(rat_str(rat(-7)) == "-7/1");
    CHECK(rat_str(rat(0)) == "0/1");
    CHECK(rat_parse(rat_str(rat(-355, 113))) == rat(-355, 113));
    CHECK_THROWS_AS(rat_parse("1/0"), DataError);
    CHECK_THROWS_AS(rat_parse(""), DataError);
    CHECK_THROWS_AS(rat_parse("a/b"), DataError);
    CHECK_THROWS_AS(rat_parse("1.5"), DataError);
}

TEST_CASE("perfect squares and exact square roots") {
    CHECK(is_perfect_square(rat(9, 4)));
    CHECK(*sqrt_exact(rat(9, 4)) == rat(3, 2));
    CHECK(!is_perfect_square(rat(2)));
    CHECK(!is_perfect_square(rat(-4)));
    CHECK(*sqrt_exact(rat(0)) == rat(0));
    CHECK(!sqrt_exact(rat(1, 3)).has_value());
}

TEST_CASE("quadratic extension arithmetic") {
    Quad r2 = quad_sqrt(rat(2));
    CHECK((Quad(rat(1)) + r2) * (Quad(rat(1)) - r2) == Quad(rat(-1))); // conjugate product
    CHECK(quad_sqrt(rat(3)) * quad_sqrt(rat(3)) == Quad(rat(3)));
    Quad x(rat(3, 5), rat(-2, 7), rat(11));
    CHECK(Quad(rat(1)) * x == x);
    CHECK(x / x == Quad(rat(1)));
    CHECK(x - x == Quad(rat(0)));
    // fold: sqrt of a perfect square collapses to the rational tier
    CHECK(quad_sqrt(rat(9, 4)).is_rational());
    CHECK(quad_sqrt(rat(9, 4)) == Quad(rat(3, 2)));
    CHECK_THROWS_AS(quad_sqrt(rat(-1)), GeomError);
    Quad y(rat(0), rat(1), rat(3));
    CHECK_THROWS_AS(x * y, GeomError); // mismatched radicands
    CHECK_THROWS_AS(x / Quad(rat(0)), GeomError);
}

TEST_CASE("quadratic extension field identities on random values") {
    // spot-check associativity and distributivity with a fixed radicand
    Rat d = rat(7);
    auto q = [&](long a1, long a2, long b1, long b2) { return Quad(rat(a1, a2), rat(b1, b2), d); };
    Quad u = q(3, 2, -5, 4), v = q(-1, 3, 2, 9), w = q(4, 7, 1, 2);
    CHECK((u + v) + w == u + (v + w));
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * (v + w) == u * v + u * w);
    CHECK(u * v == v * u);
    CHECK((u / v) * v == u);
}

TEST_CASE("exact sign of a + b sqrt(d)") {
    CHECK(qsgn(Quad(rat(1), rat(1), rat(2))) == 1);
    CHECK(qsgn(Quad(rat(2), rat(-1), rat(5))) == -1); // 2 < sqrt(5)
    CHECK(qsgn(Quad(rat(3), rat(-1), rat(5))) == 1);  // 3 > sqrt(5)
    CHECK(qsgn(Quad(rat(-2), rat(1), rat(5))) == 1);
    CHECK(qsgn(Quad(rat(0), rat(0), rat(0))) == 0);
    CHECK(qsgn(Quad(rat(0), rat(-3), rat(2))) == -1);
    // a^2 = b^2 d: exact cancellation (radicand a perfect square folds first)
    CHECK(qsgn(Quad(rat(3), rat(-1), rat(9))) == 0);
}

TEST_CASE("sign agrees with the floating image away from zero") {
    Quad vals[] = {Quad(rat(3), rat(-1), rat(5)), Quad(rat(-22, 7), rat(1), rat(10)),
                   Quad(rat(1, 1000), rat(0), rat(0))};
    for (const Quad& v : vals) {
        double img = to_double(v);
        if (std::fabs(img) > 10 * global_tol().abs) CHECK(qsgn(v) == (img > 0 ? 1 : -1));
    }
}

TEST_CASE("approx conversions carry the tolerance policy") {
    Approx h = approx_of(rat(1, 2));
    CHECK(h.value == 0.5);
    CHECK(h.tol.rel == global_tol().rel);
    Approx s = approx_of(Quad(rat(1), rat(1), rat(2)));
    CHECK(approx_eq(s.value, 2.414213562373095).equal);
    Approx d = approx_of(rat(168, 13));
    CHECK(approx_eq(d.value, 12.923076923076923).equal);
}

TEST_CASE("toleranced comparison reports which bound fired") {
    TolCmp near_zero = approx_zero(1e-13, 1.0);
    CHECK(near_zero.equal);
    // with scale 1 the relative threshold (1e-10) dominates the absolute one
    CHECK(std::string(near_zero.bound) == "rel");
    CHECK(std::string(approx_zero(1e-11, 1.0).bound) == "rel");
    CHECK(std::string(approx_zero(1e-11, 0.0).bound) == "abs");
    CHECK(!approx_zero(1e-6, 1.0).equal);
    CHECK(approx_eq(1.0, 1.0 + 1e-12).equal);
    CHECK(!approx_eq(1.0, 1.000001).equal);
    CHECK(approx_eq(1e8, 1e8 + 1e-3).equal); // relative bound carries large scales
}

TEST_CASE("OMEGA_TOL overrides the policy") {
    Tol saved = global_tol();
    setenv("OMEGA_TOL", "1e-6", 1);
    CHECK(tol_from_env());
    CHECK(global_tol().rel == 1e-6);
    CHECK(global_tol().abs == 1e-8);
    setenv("OMEGA_TOL", "1e-5,1e-9", 1);
    CHECK(tol_from_env());
    CHECK(global_tol().rel == 1e-5);
    CHECK(global_tol().abs == 1e-9);
    setenv("OMEGA_TOL", "bogus", 1);
    CHECK_THROWS_AS(tol_from_env(), DataError);
    unsetenv("OMEGA_TOL");
    global_tol() = saved;
    CHECK(!tol_from_env());
}
