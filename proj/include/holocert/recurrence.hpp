#pragma once

// Exact evaluation of P-recursive sequences and the ratio machinery built
// on top of them: consecutive ratios b_n = a_{n+1}/a_n, the quotient
// u_n = a_{n-1} a_{n+1} / a_n^2, iterated ratio-operator tests, and direct
// Laguerre-inequality evaluation.
//
// Every value is an exact rational. Ratio-based operations refuse to work
// across zero or sign-changing terms instead of returning signed ratios;
// the Laguerre evaluators have no sign restrictions.

#include "holocert/ratfunc.hpp"
#include "holocert/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holocert {

// a_{n+d} = coeffs[0](n) a_{n+d-1} + coeffs[1](n) a_{n+d-2} + ... + coeffs[d-1](n) a_n,
// for n >= offset, with initials a_offset .. a_{offset+d-1}.
//
// An optional term-wise scale s(n) declares that the working sequence is
// h(n) a_n with h(offset) = 1 and h(n+1)/h(n) = s(n); SequenceCache folds
// it into the coefficients via apply_scale before evaluating.
struct Recurrence {
    int order = 0;
    std::vector<RationalFunction> coeffs;
    index_t offset = 0;
    std::vector<Rational> initials;
    std::optional<RationalFunction> scale;
    std::string name;

    // Throws on structural problems: wrong counts, a coefficient pole at
    // some integer >= offset, or a scale zero/pole at some integer >= offset.
    void validate() const;
};

// True iff p(n) = 0 for some integer n >= from (decided exactly via the
// root magnitude bound).
bool has_integer_root_at_least(const Poly& p, index_t from);

// Folds a term-wise scale into the recurrence: coefficients pick up
// prod_{j=1..i} s(n+d-j) and the initial values pick up the accumulated
// h(n). The input must not already carry a scale annotation.
Recurrence apply_scale(const Recurrence& rec, const RationalFunction& s);

// Exact factor relating the scaled and unscaled ratio quotients:
// u_scaled(n) = u(n) * s(n)/s(n-1).
RationalFunction scale_u_factor(const RationalFunction& s);

class SequenceCache {
public:
    explicit SequenceCache(Recurrence rec);

    // The recurrence actually evaluated (scale folded in, if any).
    const Recurrence& effective() const { return rec_; }
    index_t offset() const { return rec_.offset; }

    // Exact term; extends the cache as needed.
    const Rational& term(index_t n);

    index_t computed_through() const { return rec_.offset + static_cast<index_t>(values_.size()) - 1; }

private:
    void extend_to(index_t n);
    Recurrence rec_;
    std::vector<Rational> values_;
};

// b_n = a_{n+1}/a_n.
Rational ratio_b(SequenceCache& cache, index_t n);

// u_n = a_{n-1} a_{n+1} / a_n^2 (requires n >= offset+1).
Rational ratio_u(SequenceCache& cache, index_t n);

// k-fold ratio-operator test value: phi_ratio(0, n) = u_n and
// phi_ratio(k+1, n) = phi_ratio(k, n+1) / phi_ratio(k, n).
Rational phi_ratio(SequenceCache& cache, int k, index_t n);

// L_m(a_n) = 1/2 sum_{k=0}^{2m} (-1)^{k+m} C(2m,k) a_{n+k} a_{n+2m-k}.
// For m = 2 this is 3 a_{n+2}^2 - 4 a_{n+1} a_{n+3} + a_n a_{n+4}.
Rational laguerre_direct(SequenceCache& cache, int m, index_t n);

enum class CheckOutcome { holds, boundary, fails };

// Row n collects the three order-3 inequalities anchored so that rows
// n > M holding is exactly what the truncated sequence {a_k}_{k >= M}
// needs: the second-iterate test requires two index shifts, so it is
// carried left-anchored (its center sits at n+1).
struct LogMonoRow {
    index_t n;
    CheckOutcome u_above_one;   // u_n > 1
    CheckOutcome u_decreasing;  // u_n - u_{n+1} > 0
    CheckOutcome u_log_convex;  // u_n u_{n+2} - u_{n+1}^2 > 0
};

// Exact truth table of the three order-3 inequalities on [lo, hi].
std::vector<LogMonoRow> scan_logmono(SequenceCache& cache, index_t lo, index_t hi);

struct LaguerreViolation {
    index_t n;
    bool boundary;  // exact zero, reported separately from strict violations
};

// Indices in [lo, hi] where L_m(a_n) <= 0; empty means the strict
// inequality holds on the whole window.
std::vector<LaguerreViolation> scan_laguerre(SequenceCache& cache, int m, index_t lo, index_t hi);

}  // namespace holocert
