#include "holocert/expansion.hpp"

#include <algorithm>
#include <set>

namespace holocert {

namespace {

// Truncated power series in t with coefficients in a commutative ring.
template <typename T>
struct TruncSeries {
    std::vector<T> c;  // c[i] multiplies t^i; fixed length K+1

    explicit TruncSeries(int order) : c(static_cast<std::size_t>(order) + 1, T()) {}

    int order() const { return static_cast<int>(c.size()) - 1; }

    TruncSeries& operator+=(const TruncSeries& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(a.order());
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; i + j < a.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
        return out;
    }
};

}  // namespace

void Expansion::validate() const {
    Rational prev(0);
    for (const auto& t : terms) {
        if (!(t.alpha > prev)) throw error("expansion exponents must be positive and strictly increasing");
        prev = t.alpha;
    }
    if (!terms.empty() && !(beta > terms.back().alpha))
        throw error("remainder exponent beta must exceed the last term exponent");
    if (terms.empty() && !(beta > 0)) throw error("remainder exponent beta must be positive");
}

const Rational& Expansion::alpha_first() const {
    if (terms.empty()) throw error("expansion has no terms");
    return terms.front().alpha;
}

const Rational& Expansion::alpha_last() const {
    if (terms.empty()) throw error("expansion has no terms");
    return terms.back().alpha;
}

const LogRat& Expansion::r_first() const {
    if (terms.empty()) throw error("expansion has no terms");
    return terms.front().coeff;
}

Expansion pad_integer_steps(Expansion e) {
    e.validate();
    if (e.terms.empty()) return e;
    std::set<Rational> present;
    for (const auto& t : e.terms) present.insert(t.alpha);
    const Rational a1 = e.alpha_first();
    for (int j = 1;; ++j) {
        Rational x = a1 + j;
        if (!(x < e.beta)) break;
        if (!present.count(x)) e.terms.push_back({x, LogRat()});
    }
    std::sort(e.terms.begin(), e.terms.end(),
              [](const ExpansionTerm& a, const ExpansionTerm& b) { return a.alpha < b.alpha; });
    return e;
}

std::vector<LogRat> shift_expand(const LogRat& r, int K, int direction) {
    if (K < 1) throw error("shift_expand: K must be >= 1");
    if (direction != 1 && direction != -1) throw error("shift_expand: direction must be +1 or -1");

    // eps = log(1 +/- 1/n) as a series in t = 1/n, truncated at order K.
    TruncSeries<LogRat> eps(K);
    for (int i = 1; i <= K; ++i) {
        Rational c = Rational(1) / i;
        if (direction == 1 && i % 2 == 0) c = -c;  // t - t^2/2 + t^3/3 - ...
        if (direction == -1) c = -c;               // -t - t^2/2 - t^3/3 - ...
        eps.c[static_cast<std::size_t>(i)] = LogRat(c);
    }

    // r(L + eps) = sum_j r^(j)(L)/j! eps^j; eps has valuation 1.
    TruncSeries<LogRat> acc(K);
    TruncSeries<LogRat> eps_pow(K);
    eps_pow.c[0] = LogRat(Rational(1));
    LogRat deriv = r;
    Rational factorial(1);
    for (int j = 1; j <= K; ++j) {
        deriv = deriv.derivative();
        factorial *= j;
        eps_pow = eps_pow * eps;
        LogRat scaled = deriv * LogRat(Rational(1) / factorial);
        for (int i = j; i <= K; ++i)
            acc.c[static_cast<std::size_t>(i)] += scaled * eps_pow.c[static_cast<std::size_t>(i)];
    }

    std::vector<LogRat> out;
    out.reserve(static_cast<std::size_t>(K));
    for (int i = 1; i <= K; ++i) out.push_back(acc.c[static_cast<std::size_t>(i)]);
    return out;
}

LeadingTerm lemma21_leading(const LogRat& r, const Rational& gamma, const Rational& alpha,
                            Lemma21Branch which) {
    if (!(gamma > 0) || !(alpha > 0)) throw error("lemma21_leading: alpha and gamma must be positive");
    Rational s = alpha + gamma;
    switch (which) {
        case Lemma21Branch::A:
            return {alpha - gamma - 1, LogRat(s) * r};
        case Lemma21Branch::B:
            return {2 * alpha - gamma - 2, LogRat(s * (s + 1)) * r};
        case Lemma21Branch::C:
            return {2 * alpha - 2 * gamma - 2, LogRat(s) * r * r};
    }
    throw error("lemma21_leading: unknown branch");
}

namespace {

bool trailing_padding(const Expansion& e) {
    return !e.terms.empty() && e.terms.back().coeff.is_zero();
}

}  // namespace

ClassifierVerdict classify_logmono(const Expansion& e) {
    e.validate();
    ClassifierVerdict v;
    if (e.terms.empty()) {
        v.branch = "inconclusive: empty expansion";
        return v;
    }
    v.used_padding = trailing_padding(e);
    const Rational& a1 = e.alpha_first();
    const Rational& am = e.alpha_last();
    if (am - a1 < 1) {
        v.branch = "inconclusive: alpha_m - alpha_1 < 1";
        return v;
    }
    if (eventual_sign(e.r_first()) != EventualSign::positive) {
        v.branch = "inconclusive: r_1 not eventually positive";
        return v;
    }
    v.holds = true;
    v.branch = "r1-positive";
    v.ell = static_cast<long>(to_index(floor_div(numerator(am) * denominator(a1),
                                                 denominator(am) * numerator(a1))));
    v.predicted = PredictedLeading{+1, a1, e.r_first()};
    return v;
}

PredictedLeading phi_leading_term(const Expansion& e, int k) {
    e.validate();
    if (k < 0) throw error("phi_leading_term: k must be >= 0");
    const Rational& a1 = e.alpha_first();
    if (!(a1 + k < e.beta))
        throw inapplicable_error("phi_leading_term: k exceeds the precision justified by beta");
    return {k % 2 == 0 ? +1 : -1, a1 + k, LogRat(pochhammer(a1, k)) * e.r_first()};
}

ClassifierVerdict classify_laguerre2(const Expansion& e) {
    e.validate();
    ClassifierVerdict v;
    if (e.terms.empty()) {
        v.branch = "inconclusive: empty expansion";
        return v;
    }
    v.used_padding = trailing_padding(e);
    const Rational& a1 = e.alpha_first();
    const Rational& am = e.alpha_last();
    if (am - a1 < 1) {
        v.branch = "inconclusive: alpha_m - alpha_1 < 1";
        return v;
    }
    const LogRat& r1 = e.r_first();
    EventualSign s = eventual_sign(r1);
    if (s == EventualSign::positive) {
        v.holds = true;
        v.branch = "i";
    } else if (s == EventualSign::negative && a1 < 2) {
        v.holds = true;
        v.branch = "ii";
    } else if (s == EventualSign::negative && a1 == 2 &&
               eventual_sign(r1 + LogRat(Rational(1))) == EventualSign::negative) {
        v.holds = true;
        v.branch = "iii";
    } else {
        v.branch = "inconclusive: no branch applies";
        return v;
    }
    LeadingTerm lead = laguerre2_asymptotic(e);
    EventualSign ls = eventual_sign(lead.coeff);
    v.predicted = PredictedLeading{ls == EventualSign::negative ? -1 : +1, lead.exponent, lead.coeff};
    return v;
}

LeadingTerm laguerre2_asymptotic(const Expansion& e) {
    e.validate();
    if (e.terms.empty()) throw inapplicable_error("laguerre2_asymptotic: empty expansion");
    const Rational& a1 = e.alpha_first();
    const LogRat& r1 = e.r_first();
    {
        EventualSign s = eventual_sign(r1);
        bool ok = e.alpha_last() - a1 >= 1 &&
                  (s == EventualSign::positive || (s == EventualSign::negative && a1 < 2) ||
                   (s == EventualSign::negative && a1 == 2 &&
                    eventual_sign(r1 + LogRat(Rational(1))) == EventualSign::negative));
        if (!ok) throw inapplicable_error("laguerre2_asymptotic: expansion satisfies no branch");
    }
    if (a1 > 2) return {a1 + 2, LogRat(a1 * a1 + a1) * r1};
    if (a1 < 2) return {2 * a1, LogRat(Rational(6)) * r1 * r1};
    return {Rational(4), LogRat(Rational(6)) * r1 * (LogRat(Rational(1)) + r1)};
}

std::array<LeadingTerm, 4> laguerre2_t_terms(const Expansion& e) {
    e.validate();
    const Rational& a = e.alpha_first();
    const LogRat& r1 = e.r_first();
    return {LeadingTerm{3 * a - 2, LogRat(a * a + a) * r1},
            LeadingTerm{2 * a, LogRat(Rational(6)) * r1 * r1},
            LeadingTerm{a, LogRat(Rational(4)) * r1 * r1 * r1},
            LeadingTerm{Rational(0), r1 * r1 * r1 * r1}};
}

BigFloat eval_bigfloat(const RationalFunction& f, const BigFloat& x) {
    auto horner = [&x](const Poly& p) {
        BigFloat acc(0);
        for (int i = p.degree(); i >= 0; --i) acc = acc * x + BigFloat(p.coeff(i));
        return acc;
    };
    BigFloat d = horner(f.den());
    if (d == 0) throw pole_error("eval_bigfloat: denominator vanished");
    return horner(f.num()) / d;
}

namespace {

BigFloat numeric_eval_at(const Expansion& e, index_t n, unsigned digits) {
    PrecisionGuard guard(digits);
    BigFloat ln = log(BigFloat(n));
    BigFloat acc(1);
    for (const auto& t : e.terms) {
        if (t.coeff.is_zero()) continue;
        BigFloat c = eval_bigfloat(t.coeff, ln);
        BigFloat decay = pow(BigFloat(n), BigFloat(Rational(t.alpha)));
        acc += c / decay;
    }
    return acc;
}

}  // namespace

BigFloat numeric_eval(const Expansion& e, index_t n) {
    e.validate();
    if (n < 2) throw error("numeric_eval: n must be >= 2");
    const BigFloat tol("1e-25");
    unsigned digits = 50;
    BigFloat prev = numeric_eval_at(e, n, digits);
    while (digits <= 6400) {
        digits *= 2;
        BigFloat cur = numeric_eval_at(e, n, digits);
        PrecisionGuard guard(digits);
        BigFloat diff = abs(cur - prev);
        BigFloat scale = abs(cur);
        if (scale == 0 ? diff == 0 : diff <= tol * scale) return cur;
        prev = cur;
    }
    throw error("numeric_eval: precision escalation failed to converge");
}

}  // namespace holocert
