#include "holocert/expansion.hpp"

#include "holocert/recurrence.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace holocert;
using namespace holocert::testing;

namespace {

LogRat Lvar() { return LogRat::variable(); }

Expansion make_expansion(std::vector<std::pair<Rational, LogRat>> terms, Rational beta) {
    Expansion e;
    for (auto& [a, r] : terms) e.terms.push_back({a, std::move(r)});
    e.beta = std::move(beta);
    e.validate();
    return e;
}

// 1 + c/n^alpha padded at integer steps below beta.
Expansion simple_expansion(const Rational& alpha, const LogRat& r, const Rational& beta) {
    return pad_integer_steps(make_expansion({{alpha, r}}, beta));
}

BigFloat abs_bf(const BigFloat& x) { return x < 0 ? BigFloat(-x) : x; }

}  // namespace

TEST_CASE("expansion validation and padding") {
    CHECK_THROWS_AS(make_expansion({{Rational(2), LogRat(Rational(1))},
                                    {Rational(1), LogRat(Rational(1))}},
                                   Rational(3)),
                    error);
    CHECK_THROWS_AS(make_expansion({{Rational(1), LogRat(Rational(1))}}, Rational(1)), error);

    Expansion padded = simple_expansion(Rational(1), LogRat(Rational(1)), Rational(7, 2));
    REQUIRE(padded.terms.size() == 3);  // exponents 1, 2, 3
    CHECK(padded.terms[1].alpha == 2);
    CHECK(padded.terms[1].coeff.is_zero());
    CHECK(padded.terms[2].alpha == 3);

    Expansion padded2 = simple_expansion(Rational(2), LogRat(Rational(2)), Rational(7, 2));
    REQUIRE(padded2.terms.size() == 2);  // exponents 2, 3
    CHECK(padded2.terms[1].alpha == 3);
}

TEST_CASE("shift expansion coefficients for simple inputs") {
    auto up = shift_expand(Lvar(), 2, +1);
    REQUIRE(up.size() == 2);
    CHECK(up[0] == LogRat(Rational(1)));
    CHECK(up[1] == LogRat(Rational(-1, 2)));

    auto constant = shift_expand(LogRat(Rational(5)), 3, +1);
    for (const auto& c : constant) CHECK(c.is_zero());

    auto square = shift_expand(Lvar() * Lvar(), 2, +1);
    CHECK(square[0] == LogRat(Rational(2)) * Lvar());  // r' = 2L
    CHECK(square[1] == LogRat(Rational(1)) - Lvar());  // (r''-r')/2 = 1-L

    auto down = shift_expand(Lvar(), 2, -1);
    CHECK(down[0] == LogRat(Rational(-1)));
    CHECK(down[1] == LogRat(Rational(-1, 2)));
}

TEST_CASE("shift expansion identities for random rational functions") {
    std::mt19937_64 rng(41);
    int done = 0;
    for (int i = 0; i < 80 && done < 50; ++i) {
        LogRat r = (i % 2 == 0) ? LogRat(random_poly(rng, 4, 6)) : random_ratfunc(rng, 4, 6);
        if (r.is_zero()) continue;
        ++done;
        LogRat d1 = r.derivative();
        LogRat d2 = d1.derivative();
        LogRat second = (d2 - d1) * LogRat(Rational(1, 2));
        auto up = shift_expand(r, 2, +1);
        CHECK(up[0] == d1);
        CHECK(up[1] == second);
        auto down = shift_expand(r, 2, -1);
        CHECK(down[0] == -d1);
        CHECK(down[1] == second);
    }
    CHECK(done == 50);
}

TEST_CASE("numeric check of a shift expansion tail") {
    // r(log(n+1)) - r(log n) vs the K-term expansion at large n
    PrecisionGuard guard(80);
    LogRat r = Lvar() * Lvar() + LogRat(Rational(3));
    int K = 4;
    auto coeffs = shift_expand(r, K, +1);
    index_t n = 100000;
    BigFloat ln = log(BigFloat(n));
    BigFloat lhs = eval_bigfloat(r, log(BigFloat(n + 1))) - eval_bigfloat(r, ln);
    BigFloat rhs(0);
    for (int i = 1; i <= K; ++i)
        rhs += eval_bigfloat(coeffs[static_cast<std::size_t>(i - 1)], ln) / pow(BigFloat(n), i);
    CHECK(abs_bf(lhs - rhs) < pow(BigFloat(n), -(K / 2 + 2)));
}

TEST_CASE("estimation lemma leading terms") {
    auto a = lemma21_leading(LogRat(Rational(1)), Rational(1), Rational(1, 2), Lemma21Branch::A);
    CHECK(a.exponent == Rational(-3, 2));
    CHECK(a.coeff == LogRat(Rational(3, 2)));

    auto b = lemma21_leading(LogRat(Rational(1)), Rational(1), Rational(1), Lemma21Branch::B);
    CHECK(b.exponent == Rational(-1));  // 2a - g - 2
    CHECK(b.coeff == LogRat(Rational(6)));

    auto c = lemma21_leading(Lvar(), Rational(2), Rational(2), Lemma21Branch::C);
    CHECK(c.exponent == Rational(-2));  // 2a - 2g - 2
    CHECK(c.coeff == LogRat(Rational(4)) * Lvar() * Lvar());

    CHECK_THROWS_AS(lemma21_leading(Lvar(), Rational(0), Rational(1), Lemma21Branch::A), error);
}

namespace {

// Direct evaluation of the three lemma quantities at a concrete n, in
// high-precision floating point; independent of the formulas under test.
BigFloat lemma21_direct(const LogRat& r, const Rational& gamma, const Rational& alpha,
                        Lemma21Branch which, index_t n) {
    auto xi = [&](index_t m) {
        return eval_bigfloat(r, log(BigFloat(m))) / pow(BigFloat(m), BigFloat(Rational(gamma)));
    };
    BigFloat a{Rational(alpha)};
    BigFloat np = pow(BigFloat(n + 1), a), nc = pow(BigFloat(n), a), nm = pow(BigFloat(n - 1), a);
    switch (which) {
        case Lemma21Branch::A:
            return np * xi(n) - nc * xi(n + 1);
        case Lemma21Branch::B:
            return xi(n + 1) * nm * nc + xi(n - 1) * np * nc - 2 * xi(n) * nm * np;
        case Lemma21Branch::C:
            return xi(n - 1) * xi(n + 1) * nc * nc - xi(n) * xi(n) * np * nm;
    }
    return BigFloat(0);
}

}  // namespace

TEST_CASE("estimation lemma quantities converge to their leading terms") {
    PrecisionGuard guard(80);
    const index_t n = 1000000;
    const BigFloat ln = log(BigFloat(n));
    struct Probe {
        LogRat r;
        Rational gamma, alpha;
    };
    std::vector<Probe> probes = {
        {LogRat(Rational(1)), Rational(1), Rational(1)},
        {LogRat(Rational(3)), Rational(2), Rational(1, 2)},
        {LogRat(Rational(5)) + Lvar(), Rational(1, 2), Rational(2)},
        {LogRat(Rational(7)) * Lvar(), Rational(3, 2), Rational(5, 2)},
    };
    for (const auto& probe : probes) {
        for (auto which : {Lemma21Branch::A, Lemma21Branch::B, Lemma21Branch::C}) {
            auto lead = lemma21_leading(probe.r, probe.gamma, probe.alpha, which);
            BigFloat predicted =
                eval_bigfloat(lead.coeff, ln) * pow(BigFloat(n), BigFloat(Rational(lead.exponent)));
            BigFloat exact = lemma21_direct(probe.r, probe.gamma, probe.alpha, which, n);
            CHECK(abs_bf(exact / predicted - 1) < BigFloat(Rational(1, 20)));
        }
    }
}

TEST_CASE("log-monotonicity classifier") {
    // alpha = [1,2,3], r = [1,0,0], beta = 7/2
    Expansion e1 = simple_expansion(Rational(1), LogRat(Rational(1)), Rational(7, 2));
    auto v1 = classify_logmono(e1);
    CHECK(v1.holds);
    CHECK(v1.ell == 3);
    CHECK(v1.used_padding);

    // alpha = [2,3], r = [2,0], beta = 7/2 -> ell = floor(3/2) = 1
    Expansion e2 = simple_expansion(Rational(2), LogRat(Rational(2)), Rational(7, 2));
    auto v2 = classify_logmono(e2);
    CHECK(v2.holds);
    CHECK(v2.ell == 1);

    // eventually negative leading coefficient: inconclusive
    Expansion e3 = make_expansion({{Rational(1), LogRat(Rational(-1))},
                                   {Rational(2), LogRat()}},
                                  Rational(3));
    auto v3 = classify_logmono(e3);
    CHECK_FALSE(v3.holds);

    // hypothesis alpha_m - alpha_1 >= 1 missing: inconclusive
    Expansion narrow = make_expansion({{Rational(1), LogRat(Rational(1))}}, Rational(3, 2));
    CHECK_FALSE(classify_logmono(narrow).holds);

    // 1 + 1/(n log n): r_1 = 1/L, still eventually positive
    Expansion logden = pad_integer_steps(
        make_expansion({{Rational(1), LogRat(Poly(Rational(1)), Poly::variable())}}, Rational(3)));
    CHECK(classify_logmono(logden).holds);
}

TEST_CASE("classifier is invariant under positive scaling of all coefficients") {
    std::vector<Expansion> samples = {
        simple_expansion(Rational(1), LogRat(Rational(1)), Rational(4)),
        simple_expansion(Rational(2), LogRat(Rational(-2)), Rational(4)),
        simple_expansion(Rational(1), LogRat(Rational(-1)), Rational(3)),
    };
    Rational c(17, 5);
    for (const auto& e : samples) {
        Expansion scaled = e;
        for (auto& t : scaled.terms) t.coeff = LogRat(c) * t.coeff;
        auto before_lm = classify_logmono(e), after_lm = classify_logmono(scaled);
        CHECK(before_lm.holds == after_lm.holds);
        CHECK(before_lm.ell == after_lm.ell);
        auto before_l2 = classify_laguerre2(e), after_l2 = classify_laguerre2(scaled);
        CHECK(before_l2.holds == after_l2.holds);
        CHECK(before_l2.branch == after_l2.branch);
    }
}

TEST_CASE("padding invariance") {
    // appending zero terms below beta never flips a Laguerre verdict off
    Expansion base = make_expansion({{Rational(1), LogRat(Rational(-1))},
                                     {Rational(2), LogRat(Rational(1))}},
                                    Rational(4));
    auto before = classify_laguerre2(base);
    REQUIRE(before.holds);
    Expansion padded = base;
    padded.terms.push_back({Rational(3), LogRat()});
    auto after = classify_laguerre2(padded);
    CHECK(after.holds);
    CHECK(after.branch == before.branch);

    // but padding may enlarge ell for the log-monotonicity classifier
    Expansion lm = make_expansion({{Rational(1), LogRat(Rational(1))},
                                   {Rational(2), LogRat(Rational(1))}},
                                  Rational(9, 2));
    auto ell_before = classify_logmono(lm);
    Expansion lm_padded = pad_integer_steps(lm);
    auto ell_after = classify_logmono(lm_padded);
    CHECK(ell_before.holds);
    CHECK(ell_after.holds);
    CHECK(ell_before.ell == 2);
    CHECK(ell_after.ell == 4);
    CHECK(ell_after.used_padding);
}

TEST_CASE("iterate leading-term prediction") {
    Expansion fact = simple_expansion(Rational(1), LogRat(Rational(1)), Rational(4));
    auto k0 = phi_leading_term(fact, 0);
    CHECK(k0.sign == 1);
    CHECK(k0.exponent == 1);
    CHECK(k0.coeff == LogRat(Rational(1)));

    auto k1 = phi_leading_term(fact, 1);
    CHECK(k1.sign == -1);
    CHECK(k1.exponent == 2);
    CHECK(k1.coeff == LogRat(Rational(1)));

    auto k2 = phi_leading_term(fact, 2);
    CHECK(k2.sign == 1);
    CHECK(k2.exponent == 3);
    CHECK(k2.coeff == LogRat(Rational(2)));  // (1)_2 = 2

    Expansion quad = simple_expansion(Rational(2), LogRat(Rational(2)), Rational(4));
    auto q1 = phi_leading_term(quad, 1);
    CHECK(q1.sign == -1);
    CHECK(q1.exponent == 3);
    CHECK(q1.coeff == LogRat(Rational(4)));  // (2)_1 * 2

    CHECK_THROWS_AS(phi_leading_term(fact, 3), inapplicable_error);  // 1 + 3 >= beta = 4
}

TEST_CASE("iterate prediction matches exact factorial iterates") {
    Expansion fact = simple_expansion(Rational(1), LogRat(Rational(1)), Rational(4));
    SequenceCache cache(make_factorial());
    const index_t n = 2000;
    for (int k = 0; k <= 2; ++k) {
        auto pred = phi_leading_term(fact, k);
        Rational deviation = phi_ratio(cache, k, n) - 1;
        long decay = static_cast<long>(to_index(numerator(pred.exponent)));
        Rational predicted = pred.coeff.eval(Rational(0)) * pow_int(Rational(1, n), decay);
        if (pred.sign < 0) predicted = -predicted;
        Rational ratio = deviation / predicted;
        CHECK(ratio > Rational(19, 20));
        CHECK(ratio < Rational(21, 20));
        CHECK(sign_of(deviation) == pred.sign);
    }
}

TEST_CASE("order-two Laguerre classifier branches") {
    auto holds_with = [](const Expansion& e, const char* branch) {
        auto v = classify_laguerre2(e);
        CHECK(v.holds);
        CHECK(v.branch == branch);
    };
    holds_with(simple_expansion(Rational(1), LogRat(Rational(1)), Rational(3)), "i");
    holds_with(simple_expansion(Rational(1), LogRat(Rational(-1)), Rational(3)), "ii");
    holds_with(simple_expansion(Rational(2), LogRat(Rational(-2)), Rational(4)), "iii");
    holds_with(simple_expansion(Rational(2), -Lvar(), Rational(4)), "iii");
    // 1 - 1/(n log n)
    holds_with(pad_integer_steps(make_expansion(
                   {{Rational(1), LogRat(Poly(Rational(-1)), Poly::variable())}}, Rational(3))),
               "ii");

    // boundary r_1 = -1 at alpha_1 = 2: inconclusive
    auto boundary =
        classify_laguerre2(simple_expansion(Rational(2), LogRat(Rational(-1)), Rational(4)));
    CHECK_FALSE(boundary.holds);

    // alpha_1 > 2 with negative coefficient: not covered
    auto uncovered =
        classify_laguerre2(simple_expansion(Rational(3), LogRat(Rational(-1)), Rational(5)));
    CHECK_FALSE(uncovered.holds);
}

TEST_CASE("predicted Laguerre leading term") {
    auto l1 = laguerre2_asymptotic(simple_expansion(Rational(1), LogRat(Rational(1)), Rational(3)));
    CHECK(l1.exponent == 2);
    CHECK(l1.coeff == LogRat(Rational(6)));

    // 1 - 1/n + 1/n^2 (+ padding)
    Expansion mixed = pad_integer_steps(make_expansion(
        {{Rational(1), LogRat(Rational(-1))}, {Rational(2), LogRat(Rational(1))}}, Rational(3)));
    auto l2 = laguerre2_asymptotic(mixed);
    CHECK(l2.exponent == 2);
    CHECK(l2.coeff == LogRat(Rational(6)));

    auto l3 = laguerre2_asymptotic(simple_expansion(Rational(2), LogRat(Rational(-2)), Rational(4)));
    CHECK(l3.exponent == 4);
    CHECK(l3.coeff == LogRat(Rational(12)));  // 6 * (-2) * (-1)

    auto l4 = laguerre2_asymptotic(simple_expansion(Rational(3), LogRat(Rational(1)), Rational(5)));
    CHECK(l4.exponent == 5);                  // alpha + 2
    CHECK(l4.coeff == LogRat(Rational(12)));  // alpha^2 + alpha

    CHECK_THROWS_AS(
        laguerre2_asymptotic(simple_expansion(Rational(2), LogRat(Rational(-1)), Rational(4))),
        inapplicable_error);
}

TEST_CASE("t-term diagnostics track the proof quantities") {
    Expansion e = simple_expansion(Rational(1), LogRat(Rational(1)), Rational(3));
    auto t = laguerre2_t_terms(e);
    CHECK(t[0].exponent == 1);  // 3a - 2
    CHECK(t[0].coeff == LogRat(Rational(2)));
    CHECK(t[1].exponent == 2);  // 2a
    CHECK(t[1].coeff == LogRat(Rational(6)));
    CHECK(t[2].exponent == 1);  // a
    CHECK(t[2].coeff == LogRat(Rational(4)));
    CHECK(t[3].exponent == 0);
    CHECK(t[3].coeff == LogRat(Rational(1)));

    // decay order of the dominant t over n^{4a} matches laguerre2_asymptotic
    auto lead = laguerre2_asymptotic(e);
    Rational four_a = 4 * e.alpha_first();
    CHECK(four_a - t[1].exponent == lead.exponent);  // t2 dominates for a < 2
}

TEST_CASE("exact f(n) for synthetic u-sequences matches the prediction") {
    // u_n = 1 - 2/n^2 exactly
    auto u = [](index_t n) { return Rational(1) - Rational(2, n * n); };
    const index_t n = 4000;
    Rational f_exact = u(n - 1) * u(n) * u(n) * u(n + 1) - 4 * u(n) + 3;
    auto lead = laguerre2_asymptotic(simple_expansion(Rational(2), LogRat(Rational(-2)), Rational(4)));
    Rational predicted = lead.coeff.eval(Rational(0)) * pow_int(Rational(1, n), 4);
    Rational ratio = f_exact / predicted;
    CHECK(ratio > Rational(9, 10));
    CHECK(ratio < Rational(11, 10));

    // u_n = (n+1)/n: the factorial case, f(n) = 6/(n(n-1)) exactly
    auto uf = [](index_t m) { return Rational(m + 1, m); };
    for (index_t m = 2; m <= 50; ++m) {
        Rational f_fact = uf(m - 1) * uf(m) * uf(m) * uf(m + 1) - 4 * uf(m) + 3;
        CHECK(f_fact == Rational(6, m * (m - 1)));
    }
}

TEST_CASE("high-precision expansion evaluation") {
    Expansion e = simple_expansion(Rational(1), LogRat(Rational(1)), Rational(3));
    PrecisionGuard guard(60);
    BigFloat v = numeric_eval(e, 10);
    CHECK(abs_bf(v - BigFloat(Rational(11, 10))) < BigFloat("1e-21"));

    CHECK_THROWS_AS(numeric_eval(e, 1), error);

    // agreement with exact rational evaluation for a constant-coefficient tail
    Expansion tail = make_expansion({{Rational(2), LogRat(Rational(1, 2))},
                                     {Rational(3), LogRat(Rational(-3, 8))},
                                     {Rational(4), LogRat(Rational(9, 32))},
                                     {Rational(5), LogRat(Rational(-355, 256))}},
                                    Rational(6));
    BoundPair pair = paper_trinomial_bounds();
    Rational exact = pair.g.eval(Rational(100));
    BigFloat approx = numeric_eval(tail, 100);
    CHECK(abs_bf(approx - BigFloat(exact)) < BigFloat("1e-20") * BigFloat(exact));

    // a coefficient with a log-variable denominator evaluates cleanly
    Expansion logc = pad_integer_steps(make_expansion(
        {{Rational(1), LogRat(Poly(Rational(1)), Poly::variable())}}, Rational(3)));
    BigFloat lv = numeric_eval(logc, 50);
    CHECK(lv > 1);
}
