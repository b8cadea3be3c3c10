#include "holocert/parse.hpp"

#include "holocert/report.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace holocert;
using namespace holocert::testing;

TEST_CASE("expression parsing") {
    RationalFunction r1 = parse_expression("(2*n+3)/(n+2)");
    CHECK(r1 == make_trinomial().coeffs[0]);

    RationalFunction p = parse_expression("n^2 - 1");
    CHECK(p == RationalFunction(Poly{Rational(-1), Rational(0), Rational(1)}));

    CHECK_THROWS_AS(parse_expression("1/(n-n)"), parse_error);

    CHECK(parse_expression("  n ^ 2-1 ") == p);                    // whitespace-insensitive
    CHECK(parse_expression("-n^2") == -parse_expression("n^2"));   // unary minus below ^
    CHECK(parse_expression("2^3") == RationalFunction(Rational(8)));
    CHECK(parse_expression("n^-2") ==
          RationalFunction(Poly(Rational(1)), Poly{Rational(0), Rational(0), Rational(1)}));
    CHECK(parse_expression("1/2 * n") == parse_expression("n/2"));
    CHECK(parse_expression("(1)/(L)", "L") == RationalFunction(Poly(Rational(1)), Poly::variable()));

    CHECK_THROWS_AS(parse_expression("n + "), parse_error);
    CHECK_THROWS_AS(parse_expression("x + 1"), parse_error);
    CHECK_THROWS_AS(parse_expression("3(n+1)"), parse_error);  // implicit product rejected
    try {
        parse_expression("n + @");
    } catch (const parse_error& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("print/parse round trip for random rational functions") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 40; ++i) {
        RationalFunction f = random_ratfunc(rng, 6, 30);
        RationalFunction reparsed = parse_expression(f.str("n"));
        CHECK(reparsed == f);
    }
}

TEST_CASE("expansion literals") {
    Expansion e = parse_expansion("1 + (2)/n^2 - (L)/n^3 + O(n^-4)");
    REQUIRE(e.terms.size() == 2);
    CHECK(e.terms[0].alpha == 2);
    CHECK(e.terms[0].coeff == LogRat(Rational(2)));
    CHECK(e.terms[1].alpha == 3);
    CHECK(e.terms[1].coeff == -LogRat::variable());
    CHECK(e.beta == 4);

    Expansion bare = parse_expansion("1 + 2/n^2 + O(n^-3)");
    CHECK(bare.terms[0].coeff == LogRat(Rational(2)));

    Expansion deflt = parse_expansion("1 - (1/L)/n + O(n^-3)");
    CHECK(deflt.terms[0].alpha == 1);
    CHECK(deflt.terms[0].coeff == LogRat(Poly(Rational(-1)), Poly::variable()));

    Expansion frac = parse_expansion("1 + (1)/n^(3/2) + O(n^-(7/2))");
    CHECK(frac.terms[0].alpha == Rational(3, 2));
    CHECK(frac.beta == Rational(7, 2));

    CHECK_THROWS_AS(parse_expansion("1 + (2)/n^2"), parse_error);        // missing remainder
    CHECK_THROWS_AS(parse_expansion("2 + (1)/n + O(n^-2)"), parse_error);  // must start at 1
    CHECK_THROWS_AS(parse_expansion("1 + (1)/n + O(n^2)"), parse_error);   // remainder must decay

    // print form reparses to the same expansion
    Expansion printed = parse_expansion(print_expansion(e));
    CHECK(printed.terms.size() == e.terms.size());
    CHECK(printed.beta == e.beta);
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        CHECK(printed.terms[i].alpha == e.terms[i].alpha);
        CHECK(printed.terms[i].coeff == e.terms[i].coeff);
    }
}

TEST_CASE("recurrence file parsing") {
    const std::string tri_text =
        "# central trinomial coefficients\n"
        "name: central-trinomial\n"
        "order: 2\n"
        "lhs: n + 2\n"
        "coeff1: 2*n + 3\n"
        "coeff2: 3*(n + 1)\n"
        "initial: 1, 1\n"
        "offset: 0\n";
    Recurrence rec = parse_recurrence_text(tri_text);
    CHECK(rec.order == 2);
    CHECK(rec.coeffs[0] == make_trinomial().coeffs[0]);
    CHECK(rec.coeffs[1] == make_trinomial().coeffs[1]);
    CHECK(rec.initials == std::vector<Rational>{Rational(1), Rational(1)});

    SequenceCache cache(rec);
    CHECK(cache.term(5) == Rational(51));

    const std::string scaled_text =
        "name: motzkin-scaled\n"
        "order: 2\n"
        "lhs: n + 4\n"
        "coeff1: 2*n + 5\n"
        "coeff2: 3*(n + 1)\n"
        "initial: 1, 1\n"
        "scale: 1/(n + 1)\n";
    Recurrence scaled = parse_recurrence_text(scaled_text);
    REQUIRE(scaled.scale.has_value());
    SequenceCache scache(scaled);
    CHECK(scache.term(4) == Rational(3, 8));

    CHECK_THROWS_AS(parse_recurrence_text("order: 2\ncoeff1: 1\ncoeff2: 1\ninitial: 1, 1\nbogus: 3\n"),
                    parse_error);
    CHECK_THROWS_AS(parse_recurrence_text("coeff1: 1\ninitial: 1\n"), parse_error);   // no order
    CHECK_THROWS_AS(parse_recurrence_text("order: 2\ncoeff1: 1\ninitial: 1, 1\n"),
                    parse_error);                                                     // missing coeff2
    CHECK_THROWS_AS(parse_recurrence_text("order: 1\ncoeff1: 1\ncoeff1: 2\ninitial: 1\n"),
                    parse_error);                                                     // duplicate key
    CHECK_THROWS_AS(parse_recurrence_text("order: 1\ncoeff1: 1/(n-2)\ninitial: 1\n"), pole_error);
}

TEST_CASE("rational literals") {
    CHECK(parse_rational("355/256") == Rational(355, 256));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(Rational(355, 256)) == "355/256");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("abc"), parse_error);
}

TEST_CASE("digest and decimal rendering") {
    CHECK(content_digest("abc") == content_digest("abc"));
    CHECK(content_digest("abc") != content_digest("abd"));
    std::string d = decimal_string(Rational(1, 8), 10);
    CHECK(d.substr(0, 5) == "0.125");
}
