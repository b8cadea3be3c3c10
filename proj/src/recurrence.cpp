#include "holocert/recurrence.hpp"

#include <algorithm>

namespace holocert {

namespace {

// Unreduced fraction with positive denominator; used for gcd-free sign
// work inside the scan loops.
struct Frac {
    Int num;
    Int den;
};

Frac u_frac(SequenceCache& cache, index_t n) {
    const Rational& lo = cache.term(n - 1);
    const Rational& mid = cache.term(n);
    const Rational& hi = cache.term(n + 1);
    Frac f;
    f.num = numerator(lo) * numerator(hi) * denominator(mid) * denominator(mid);
    f.den = denominator(lo) * denominator(hi) * numerator(mid) * numerator(mid);
    return f;  // positive for same-sign nonzero terms
}

CheckOutcome outcome_of_sign(int s) {
    if (s > 0) return CheckOutcome::holds;
    if (s == 0) return CheckOutcome::boundary;
    return CheckOutcome::fails;
}

void require_window_terms(SequenceCache& cache, index_t lo, index_t hi, const char* what) {
    int expected = 0;
    for (index_t n = lo; n <= hi; ++n) {
        int s = sign_of(cache.term(n));
        if (s == 0)
            throw sign_error(std::string(what) + ": zero term at index " + std::to_string(n));
        if (expected == 0) expected = s;
        else if (s != expected)
            throw sign_error(std::string(what) + ": sign change at index " + std::to_string(n));
    }
}

}  // namespace

void Recurrence::validate() const {
    if (order < 1) throw error("recurrence order must be >= 1");
    if (static_cast<int>(coeffs.size()) != order)
        throw error("expected " + std::to_string(order) + " coefficients, got " +
                    std::to_string(coeffs.size()));
    if (static_cast<int>(initials.size()) != order)
        throw error("expected " + std::to_string(order) + " initial values, got " +
                    std::to_string(initials.size()));
    for (int i = 0; i < order; ++i) {
        if (has_integer_root_at_least(coeffs[static_cast<std::size_t>(i)].den(), offset))
            throw pole_error("coefficient " + std::to_string(i + 1) +
                             " has a pole at an integer index >= offset");
    }
    if (scale) {
        if (scale->is_zero()) throw error("scale must be a nonzero rational function");
        if (has_integer_root_at_least(scale->den(), offset))
            throw pole_error("scale has a pole at an integer index >= offset");
        if (has_integer_root_at_least(scale->num(), offset))
            throw error("scale has a zero at an integer index >= offset");
    }
}

bool has_integer_root_at_least(const Poly& p, index_t from) {
    if (p.is_zero()) return true;
    if (p.degree() == 0) return false;
    Int bound = root_magnitude_bound(p);
    index_t hi = to_index(bound);
    if (hi < from) return false;
    Poly::IntPoly ip = p.integerized();
    for (index_t n = std::max(from, -hi); n <= hi; ++n)
        if (ip.sign_at(Int(n)) == 0) return true;
    return false;
}

Recurrence apply_scale(const Recurrence& rec, const RationalFunction& s) {
    if (rec.scale) throw error("apply_scale: recurrence already carries a scale annotation");
    rec.validate();
    if (s.is_zero()) throw error("apply_scale: zero scale");
    if (has_integer_root_at_least(s.den(), rec.offset))
        throw pole_error("apply_scale: scale has a pole at an integer index >= offset");
    if (has_integer_root_at_least(s.num(), rec.offset))
        throw error("apply_scale: scale has a zero at an integer index >= offset");

    Recurrence out = rec;
    if (!out.name.empty()) out.name += " (scaled)";
    const int d = rec.order;
    // R_i(n) <- R_i(n) * prod_{j=1..i} s(n + d - j)
    RationalFunction factor(Rational(1));
    for (int i = 1; i <= d; ++i) {
        factor *= s.shifted(Rational(d - i));
        out.coeffs[static_cast<std::size_t>(i - 1)] =
            rec.coeffs[static_cast<std::size_t>(i - 1)] * factor;
    }
    // initials pick up h(offset + t) with h(offset) = 1, h(n+1) = s(n) h(n)
    Rational h(1);
    for (int t = 0; t < d; ++t) {
        out.initials[static_cast<std::size_t>(t)] = rec.initials[static_cast<std::size_t>(t)] * h;
        h *= s.eval(Rational(rec.offset + t));
    }
    return out;
}

RationalFunction scale_u_factor(const RationalFunction& s) {
    return s / s.shifted(Rational(-1));
}

SequenceCache::SequenceCache(Recurrence rec) : rec_(std::move(rec)) {
    if (rec_.scale) {
        RationalFunction s = *rec_.scale;
        rec_.scale.reset();
        rec_ = apply_scale(rec_, s);
    } else {
        rec_.validate();
    }
    values_.assign(rec_.initials.begin(), rec_.initials.end());
}

void SequenceCache::extend_to(index_t n) {
    const int d = rec_.order;
    while (computed_through() < n) {
        index_t next = rec_.offset + static_cast<index_t>(values_.size());
        Rational shift_base(next - d);  // recurrence instance producing a_next
        Rational acc(0);
        for (int i = 1; i <= d; ++i) {
            const Rational& prev = values_[values_.size() - static_cast<std::size_t>(i)];
            acc += rec_.coeffs[static_cast<std::size_t>(i - 1)].eval(shift_base) * prev;
        }
        values_.push_back(std::move(acc));
    }
}

const Rational& SequenceCache::term(index_t n) {
    if (n < rec_.offset)
        throw index_error("index " + std::to_string(n) + " below offset " +
                          std::to_string(rec_.offset));
    extend_to(n);
    return values_[static_cast<std::size_t>(n - rec_.offset)];
}

Rational ratio_b(SequenceCache& cache, index_t n) {
    require_window_terms(cache, n, n + 1, "ratio_b");
    return cache.term(n + 1) / cache.term(n);
}

Rational ratio_u(SequenceCache& cache, index_t n) {
    if (n < cache.offset() + 1)
        throw index_error("ratio_u needs n >= offset+1");
    require_window_terms(cache, n - 1, n + 1, "ratio_u");
    return cache.term(n - 1) * cache.term(n + 1) / (cache.term(n) * cache.term(n));
}

Rational phi_ratio(SequenceCache& cache, int k, index_t n) {
    if (k < 0) throw error("phi_ratio: k must be >= 0");
    if (n < cache.offset() + 1)
        throw index_error("phi_ratio needs n >= offset+1");
    require_window_terms(cache, n - 1, n + k + 1, "phi_ratio");
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) row.push_back(ratio_u(cache, n + j));
    for (int level = 0; level < k; ++level) {
        for (std::size_t j = 0; j + 1 < row.size() - static_cast<std::size_t>(level); ++j) {
            if (row[j] == 0) throw sign_error("phi_ratio: zero intermediate ratio");
            row[j] = row[j + 1] / row[j];
        }
    }
    return row[0];
}

Rational laguerre_direct(SequenceCache& cache, int m, index_t n) {
    if (m < 1) throw error("laguerre_direct: m must be >= 1");
    Rational acc(0);
    for (int k = 0; k <= 2 * m; ++k) {
        Rational prod = cache.term(n + k) * cache.term(n + 2 * m - k);
        Rational c(binomial(2 * m, k));
        if ((k + m) % 2 != 0) c = -c;
        acc += c * prod;
    }
    return acc / 2;
}

std::vector<LogMonoRow> scan_logmono(SequenceCache& cache, index_t lo, index_t hi) {
    if (lo < cache.offset() + 1)
        throw index_error("scan_logmono window must start at offset+1 or later");
    if (hi < lo) return {};
    require_window_terms(cache, lo - 1, hi + 3, "scan_logmono");

    std::vector<LogMonoRow> rows;
    rows.reserve(static_cast<std::size_t>(hi - lo + 1));
    // Rolling window of u fractions at n, n+1, n+2.
    Frac u_cur = u_frac(cache, lo);
    Frac u_next = u_frac(cache, lo + 1);
    for (index_t n = lo; n <= hi; ++n) {
        Frac u_after = u_frac(cache, n + 2);
        LogMonoRow row;
        row.n = n;
        row.u_above_one = outcome_of_sign(Int(u_cur.num - u_cur.den).sign());
        row.u_decreasing =
            outcome_of_sign(Int(u_cur.num * u_next.den - u_next.num * u_cur.den).sign());
        Int lhs = u_cur.num * u_after.num * u_next.den * u_next.den;
        Int rhs = u_cur.den * u_after.den * u_next.num * u_next.num;
        row.u_log_convex = outcome_of_sign(Int(lhs - rhs).sign());
        rows.push_back(std::move(row));
        u_cur = std::move(u_next);
        u_next = std::move(u_after);
    }
    return rows;
}

std::vector<LaguerreViolation> scan_laguerre(SequenceCache& cache, int m, index_t lo, index_t hi) {
    if (m < 1) throw error("scan_laguerre: m must be >= 1");
    if (lo < cache.offset()) throw index_error("scan_laguerre window must start at offset or later");
    if (hi < lo) return {};
    cache.term(hi + 2 * m);  // extend once

    std::vector<LaguerreViolation> out;
    const int w = 2 * m + 1;
    std::vector<Int> p(static_cast<std::size_t>(w)), q(static_cast<std::size_t>(w));
    for (index_t n = lo; n <= hi; ++n) {
        bool all_integer = true;
        for (int j = 0; j < w; ++j) {
            const Rational& t = cache.term(n + j);
            p[static_cast<std::size_t>(j)] = numerator(t);
            q[static_cast<std::size_t>(j)] = denominator(t);
            if (q[static_cast<std::size_t>(j)] != 1) all_integer = false;
        }
        // Sign of sum_k (-1)^{k+m} C(2m,k) a_{n+k} a_{n+2m-k} over the
        // common denominator (prod_j q_j) * q_m; gcd-free on purpose.
        Int total(0);
        if (all_integer) {
            for (int k = 0; k <= 2 * m; ++k) {
                Int term = binomial(2 * m, k) * p[static_cast<std::size_t>(k)] *
                           p[static_cast<std::size_t>(2 * m - k)];
                if ((k + m) % 2 == 0) total += term;
                else total -= term;
            }
        } else {
            Int common(1);
            for (int j = 0; j < w; ++j) common *= q[static_cast<std::size_t>(j)];
            common *= q[static_cast<std::size_t>(m)];
            for (int k = 0; k <= 2 * m; ++k) {
                Int mult = common / (q[static_cast<std::size_t>(k)] *
                                     q[static_cast<std::size_t>(2 * m - k)]);
                Int term = binomial(2 * m, k) * p[static_cast<std::size_t>(k)] *
                           p[static_cast<std::size_t>(2 * m - k)] * mult;
                if ((k + m) % 2 == 0) total += term;
                else total -= term;
            }
        }
        int s = total.sign();
        if (s <= 0) out.push_back({n, s == 0});
    }
    return out;
}

}  // namespace holocert
