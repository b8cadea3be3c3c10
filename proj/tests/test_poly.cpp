#include "holocert/poly.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace holocert;

TEST_CASE("polynomial arithmetic and canonical form") {
    Poly x = Poly::variable();
    Poly p = x * x - Poly(Rational(1));  // x^2 - 1
    Poly q = x - Poly(Rational(1));

    CHECK(p.degree() == 2);
    CHECK((p + (-p)).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p * q == q * p);

    // trailing zeros are trimmed away
    Poly padded({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(padded.degree() == 1);

    CHECK(p.eval(Rational(3)) == Rational(8));
    CHECK(p.constant_term() == Rational(-1));
}

TEST_CASE("divmod and gcd") {
    Poly x = Poly::variable();
    Poly p = x * x - Poly(Rational(1));
    Poly q = x - Poly(Rational(1));
    auto [quot, rem] = Poly::divmod(p, q);
    CHECK(rem.is_zero());
    CHECK(quot == x + Poly(Rational(1)));

    CHECK(Poly::gcd(p, q) == q.monic());
    CHECK(Poly::gcd(p, x + Poly(Rational(2))) == Poly(Rational(1)));
    CHECK_THROWS_AS(Poly::divmod(p, Poly()), error);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        Poly a = testing::random_poly(rng, 5, 9);
        Poly b = testing::random_nonzero_poly(rng, 4, 9);
        auto [s, r] = Poly::divmod(a, b);
        CHECK(s * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("derivative and shift") {
    Poly x = Poly::variable();
    CHECK((x * x).derivative() == Rational(2) * x);
    CHECK(x.shifted(Rational(1)) == x + Poly(Rational(1)));

    // (x+1)^3 expanded
    Poly cubed = x * x * x;
    Poly shifted = cubed.shifted(Rational(1));
    CHECK(shifted.eval(Rational(2)) == Rational(27));
    CHECK(shifted.coeff(1) == Rational(3));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        Poly p = testing::random_poly(rng, 5, 9);
        Rational a = testing::random_rational(rng, 5, 3);
        CHECK(p.shifted(a).shifted(Rational(-a)) == p);
        CHECK(p.shifted(a).eval(Rational(2)) == p.eval(Rational(2) + a));
    }
}

TEST_CASE("integerized image preserves signs") {
    Poly p({Rational(1, 3), Rational(-5, 6), Rational(7, 2)});
    auto ip = p.integerized();
    CHECK(ip.scale == 6);
    CHECK(ip.coef == std::vector<Int>{Int(2), Int(-5), Int(21)});
    for (long n = -4; n <= 4; ++n)
        CHECK(ip.sign_at(Int(n)) == sign_of(p.eval(Rational(n))));
}
