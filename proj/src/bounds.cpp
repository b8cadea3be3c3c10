#include "holocert/bounds.hpp"

#include <algorithm>
#include <vector>

namespace holocert {

namespace {

// Truncated power series in t = 1/n over the rationals.
struct TSeries {
    std::vector<Rational> c;
    explicit TSeries(int order) : c(static_cast<std::size_t>(order) + 1, Rational(0)) {}
    int order() const { return static_cast<int>(c.size()) - 1; }
};

TSeries mul(const TSeries& a, const TSeries& b) {
    TSeries out(a.order());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; i + j < a.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
}

TSeries inverse(const TSeries& a) {
    if (a.c[0] == 0) throw error("series inverse: zero constant term");
    TSeries out(a.order());
    out.c[0] = Rational(1) / a.c[0];
    for (int i = 1; i <= a.order(); ++i) {
        Rational acc(0);
        for (int j = 1; j <= i; ++j) acc += a.c[static_cast<std::size_t>(j)] * out.c[static_cast<std::size_t>(i - j)];
        out.c[static_cast<std::size_t>(i)] = -acc / a.c[0];
    }
    return out;
}

// Expansion of a rational function of n in powers of t = 1/n; requires a
// finite limit at infinity (deg num <= deg den).
TSeries at_infinity(const RationalFunction& r, int order) {
    const Poly& num = r.num();
    const Poly& den = r.den();
    if (num.degree() > den.degree())
        throw inapplicable_error("coefficient has no finite limit at infinity");
    TSeries rn(order), rd(order);
    for (int j = 0; j <= order && j <= den.degree(); ++j)
        rd.c[static_cast<std::size_t>(j)] = den.coeff(den.degree() - j);
    int shift = den.degree() - std::max(num.degree(), 0);
    if (!num.is_zero())
        for (int j = 0; j + shift <= order && j <= num.degree(); ++j)
            rn.c[static_cast<std::size_t>(j + shift)] = num.coeff(num.degree() - j);
    return mul(rn, inverse(rd));
}

// Exact square root of a nonnegative rational, if it exists.
std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    Int n = numerator(q), d = denominator(q);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::certified: return "certified";
        case Provenance::paper_supplied: return "supplied";
        case Provenance::scan_verified: return "scan-verified";
    }
    return "?";
}

void validate_pair(const BoundPair& pair) {
    auto hp_g = hold_point(pair.g, pair.valid_from);
    if (!hp_g || *hp_g != pair.valid_from)
        throw inapplicable_error("bound pair: g is not positive and pole-free from valid_from");
    auto hp_gap = hold_point(pair.f - pair.g, pair.valid_from);
    if (!hp_gap || *hp_gap != pair.valid_from)
        throw inapplicable_error("bound pair: f - g is not positive from valid_from");
}

BoundPair scale_bounds(const BoundPair& pair, const RationalFunction& s) {
    RationalFunction sigma = scale_u_factor(s);
    auto hp = hold_point(sigma, pair.valid_from);
    if (!hp || *hp != pair.valid_from)
        throw inapplicable_error("scale factor s(n)/s(n-1) is not positive from valid_from");
    BoundPair out = pair;
    out.g = pair.g * sigma;
    out.f = pair.f * sigma;
    return out;
}

RationalFunction RatioExpansion::truncation() const {
    const int K = static_cast<int>(c.size());
    std::vector<Rational> num(static_cast<std::size_t>(K) + 1, Rational(0));
    num[static_cast<std::size_t>(K)] = lambda;
    for (int j = 1; j <= K; ++j)
        num[static_cast<std::size_t>(K - j)] = lambda * c[static_cast<std::size_t>(j - 1)];
    std::vector<Rational> den(static_cast<std::size_t>(K) + 1, Rational(0));
    den[static_cast<std::size_t>(K)] = 1;
    return RationalFunction(Poly(std::move(num)), Poly(std::move(den)));
}

RatioExpansion expand_ratio(const Recurrence& rec, int K) {
    if (rec.scale)
        throw inapplicable_error(
            "expand_ratio works on the unscaled recurrence; fold or strip the scale first");
    if (rec.order != 2) throw inapplicable_error("expand_ratio requires an order-2 recurrence");
    if (K < 1) throw error("expand_ratio: K must be >= 1");

    const RationalFunction& R1 = rec.coeffs[0];
    const RationalFunction& R2 = rec.coeffs[1];
    TSeries r1 = at_infinity(R1, K);
    TSeries r2 = at_infinity(R2, K);
    const Rational rho = r1.c[0];
    const Rational sigma = r2.c[0];

    // Characteristic equation x^2 = rho x + sigma.
    Rational disc = rho * rho + 4 * sigma;
    if (disc < 0)
        throw inapplicable_error("complex characteristic roots: ratio expansion inapplicable "
                                 "(oscillatory asymptotic form)");
    auto root = rational_sqrt(disc);
    if (!root)
        throw inapplicable_error("irrational dominant characteristic root: not supported");
    if (*root == 0)
        throw inapplicable_error("equal characteristic roots: ratio expansion inapplicable");
    Rational x1 = (rho + *root) / 2;
    Rational x2 = (rho - *root) / 2;
    if (abs_q(x1) == abs_q(x2))
        throw inapplicable_error("characteristic roots of equal modulus: ratio expansion "
                                 "inapplicable (oscillatory asymptotic form)");
    Rational lambda = abs_q(x1) > abs_q(x2) ? x1 : x2;
    if (lambda == 0) throw inapplicable_error("zero dominant root: ratio expansion inapplicable");

    // (1+t)^{-j} up to order K, computed incrementally.
    std::vector<TSeries> inv_pow;  // inv_pow[j] = (1+t)^{-j}
    inv_pow.emplace_back(K);
    inv_pow[0].c[0] = 1;
    TSeries one_plus_t(K);
    one_plus_t.c[0] = 1;
    if (K >= 1) one_plus_t.c[1] = 1;
    TSeries inv_one = inverse(one_plus_t);
    for (int j = 1; j <= K; ++j) inv_pow.push_back(mul(inv_pow.back(), inv_one));

    std::vector<Rational> c(static_cast<std::size_t>(K), Rational(0));
    const Rational kappa = lambda * (2 * lambda - rho);  // = lambda (x1 - x2) * sign

    auto residual = [&]() {
        // E(t) = Lam(n+1) Lam(n) - R1 Lam(n) - R2, truncated.
        TSeries lam(K), lam_next(K);
        lam.c[0] = lambda;
        lam_next.c[0] = lambda;
        for (int j = 1; j <= K; ++j) {
            Rational cj = c[static_cast<std::size_t>(j - 1)];
            lam.c[static_cast<std::size_t>(j)] = lambda * cj;
            // c_j / (n+1)^j = c_j t^j (1+t)^{-j}
            for (int i = j; i <= K; ++i)
                lam_next.c[static_cast<std::size_t>(i)] +=
                    lambda * cj * inv_pow[static_cast<std::size_t>(j)].c[static_cast<std::size_t>(i - j)];
        }
        TSeries e = mul(lam_next, lam);
        TSeries r1lam = mul(r1, lam);
        for (int i = 0; i <= K; ++i)
            e.c[static_cast<std::size_t>(i)] -=
                r1lam.c[static_cast<std::size_t>(i)] + r2.c[static_cast<std::size_t>(i)];
        return e;
    };

    if (residual().c[0] != 0) throw error("expand_ratio: dominant balance failed");
    for (int i = 1; i <= K; ++i) {
        TSeries e = residual();
        c[static_cast<std::size_t>(i - 1)] = -e.c[static_cast<std::size_t>(i)] / kappa;
    }
    TSeries final_check = residual();
    for (int i = 0; i <= K; ++i)
        if (final_check.c[static_cast<std::size_t>(i)] != 0)
            throw error("expand_ratio: order-" + std::to_string(i) + " residual did not cancel");

    return RatioExpansion{lambda, std::move(c)};
}

BoundCertificate certify_b_bounds(SequenceCache& cache, const RationalFunction& l,
                                  const RationalFunction& h, index_t n1) {
    const Recurrence& rec = cache.effective();
    if (rec.order != 2) throw inapplicable_error("certify_b_bounds requires an order-2 recurrence");
    if (n1 < rec.offset) throw index_error("certify_b_bounds: N1 below offset");
    const RationalFunction& R1 = rec.coeffs[0];
    const RationalFunction& R2 = rec.coeffs[1];

    bool decreasing;
    if (auto hp = hold_point(R2, n1); hp && *hp == n1) {
        decreasing = true;  // T_n is decreasing in x for R2 > 0
    } else if (auto hn = hold_point(-R2, n1); hn && *hn == n1) {
        decreasing = false;  // increasing for R2 < 0
    } else {
        throw inapplicable_error("certify_b_bounds: R2 is not sign-definite from N1");
    }

    auto require_hold = [&](const RationalFunction& expr, const char* what) -> index_t {
        auto hp = hold_point(expr, n1);
        if (!hp || *hp != n1)
            throw inapplicable_error(std::string("certify_b_bounds: ") + what +
                                     (hp ? " holds only from " + std::to_string(*hp)
                                         : std::string(" never holds")));
        return *hp;
    };
    require_hold(l, "lower bound positivity");
    require_hold(h - l, "bound ordering h > l");

    // Base case, exact.
    const Rational& a0 = cache.term(n1);
    const Rational& a1v = cache.term(n1 + 1);
    if (!(a0 > 0) || !(a1v > 0))
        throw sign_error("certify_b_bounds: base terms must be positive");
    Rational base_b = a1v / a0;
    Rational base_l = l.eval(Rational(n1));
    Rational base_h = h.eval(Rational(n1));
    if (!(base_l <= base_b && base_b <= base_h))
        throw inapplicable_error("certify_b_bounds: base case l(N1) <= b_{N1} <= h(N1) failed");

    // Inductive step. With x in [l(n), h(n)], T_n(x) = R1(n) + R2(n)/x lands in
    // [T_n(h(n)), T_n(l(n))] (decreasing) or [T_n(l(n)), T_n(h(n))] (increasing).
    RationalFunction l_next = l.shifted(Rational(1));
    RationalFunction h_next = h.shifted(Rational(1));
    RationalFunction t_at_l = R1 + R2 / l;
    RationalFunction t_at_h = R1 + R2 / h;
    RationalFunction lower_ineq = decreasing ? t_at_h - l_next : t_at_l - l_next;
    RationalFunction upper_ineq = decreasing ? h_next - t_at_l : h_next - t_at_h;

    BoundCertificate cert;
    cert.base_index = n1;
    cert.base_l = base_l;
    cert.base_b = base_b;
    cert.base_h = base_h;
    cert.map_decreasing = decreasing;
    cert.induction_lower_hold = require_hold(lower_ineq, "inductive lower inequality");
    cert.induction_upper_hold = require_hold(upper_ineq, "inductive upper inequality");
    cert.l = l;
    cert.h = h;
    return cert;
}

bool replay_certificate(SequenceCache& cache, const BoundCertificate& cert) {
    try {
        BoundCertificate again = certify_b_bounds(cache, cert.l, cert.h, cert.base_index);
        return again.base_b == cert.base_b && again.base_l == cert.base_l &&
               again.base_h == cert.base_h && again.map_decreasing == cert.map_decreasing &&
               again.induction_lower_hold == cert.induction_lower_hold &&
               again.induction_upper_hold == cert.induction_upper_hold;
    } catch (const error&) {
        return false;
    }
}

ProposedBounds propose_bounds(SequenceCache& cache, int K, index_t n1_hint) {
    RatioExpansion exp = expand_ratio(cache.effective(), K);
    RationalFunction lam = exp.truncation();
    std::vector<Rational> den(static_cast<std::size_t>(K) + 1, Rational(0));
    den[static_cast<std::size_t>(K)] = 1;
    RationalFunction margin_shape(Poly(Rational(1)), Poly(std::move(den)));  // 1/n^K

    std::vector<index_t> grid;
    auto add_candidate = [&](index_t n1) {
        n1 = std::max(n1, cache.offset());
        if (std::find(grid.begin(), grid.end(), n1) == grid.end()) grid.push_back(n1);
    };
    if (n1_hint > 0) add_candidate(n1_hint);
    for (index_t g : {10, 20, 50, 100, 250, 500}) add_candidate(g);

    constexpr int kBudget = 40;
    constexpr int kDoublingsPerStart = 8;  // margins 1..128 at each N1 before moving on
    int attempts = 0;
    std::string last_failure = "no attempt made";
    for (index_t n1 : grid) {
        Rational margin(1);
        for (int step = 0; step < kDoublingsPerStart; ++step, margin *= 2) {
            if (attempts >= kBudget)
                throw inapplicable_error("propose_bounds: search budget exhausted (" +
                                         std::to_string(kBudget) + " attempts); last failure: " +
                                         last_failure);
            ++attempts;
            RationalFunction delta = RationalFunction(margin) * margin_shape;
            try {
                BoundCertificate cert = certify_b_bounds(cache, lam - delta, lam + delta, n1);
                return ProposedBounds{std::move(cert), margin, attempts};
            } catch (const error& e) {
                last_failure = e.what();
            }
        }
    }
    throw inapplicable_error("propose_bounds: no certificate found on the margin/start grid; "
                             "last failure: " + last_failure);
}

BoundPair u_bounds_from_b(const BoundCertificate& cert) {
    BoundPair pair;
    pair.g = cert.l / cert.h.shifted(Rational(-1));
    pair.f = cert.h / cert.l.shifted(Rational(-1));
    pair.valid_from = cert.base_index + 1;
    pair.provenance = Provenance::certified;
    return pair;
}

std::vector<BoundViolation> verify_bounds_scan(SequenceCache& cache, const BoundPair& pair,
                                               index_t lo, index_t hi) {
    if (lo < cache.offset() + 1) throw index_error("verify_bounds_scan window must start at offset+1");
    std::vector<BoundViolation> out;
    if (hi < lo) return out;
    cache.term(hi + 1);
    for (index_t n = lo; n <= hi; ++n) {
        const Rational& tm = cache.term(n - 1);
        const Rational& t0 = cache.term(n);
        const Rational& tp = cache.term(n + 1);
        if (!(tm > 0) || !(t0 > 0) || !(tp > 0))
            throw sign_error("verify_bounds_scan: nonpositive term at index " + std::to_string(n));
        // u_n as an unreduced positive fraction.
        Int u_num = numerator(tm) * numerator(tp) * denominator(t0) * denominator(t0);
        Int u_den = denominator(tm) * denominator(tp) * numerator(t0) * numerator(t0);
        Rational gn, fn;
        try {
            gn = pair.g.eval(Rational(n));
            fn = pair.f.eval(Rational(n));
        } catch (const pole_error&) {
            out.push_back({n, BoundViolation::Kind::pole, false});
            continue;
        }
        // g(n) < u_n  <=>  num(g) * u_den < u_num * den(g)   (all denominators positive)
        Int lhs_g = numerator(gn) * u_den;
        Int rhs_g = u_num * denominator(gn);
        if (lhs_g >= rhs_g) out.push_back({n, BoundViolation::Kind::below_lower, lhs_g == rhs_g});
        Int lhs_f = u_num * denominator(fn);
        Int rhs_f = numerator(fn) * u_den;
        if (lhs_f >= rhs_f) out.push_back({n, BoundViolation::Kind::above_upper, lhs_f == rhs_f});
    }
    return out;
}

}  // namespace holocert
