#pragma once

// Produces and certifies rational-function bounds g(n) < u_n < f(n) valid
// for all n >= N1, for order-2 recurrences whose consecutive ratio b_n has
// a finite nonzero rational limit: a formal expansion of b_n around its
// limit gives candidate bounds, and a monotone-map interval induction
// turns them into a machine-checkable certificate. Exact finite-window
// scanning is available as the general fallback.

#include "holocert/ratfunc.hpp"
#include "holocert/rational.hpp"
#include "holocert/recurrence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holocert {

enum class Provenance { certified, paper_supplied, scan_verified };

std::string to_string(Provenance p);

struct BoundPair {
    RationalFunction g;  // lower bound on u_n
    RationalFunction f;  // upper bound on u_n
    index_t valid_from = 0;
    Provenance provenance = Provenance::scan_verified;
};

// Checks 0 < g(n) < f(n) for all n >= valid_from (pole-free included);
// throws inapplicable_error otherwise.
void validate_pair(const BoundPair& pair);

// u-bounds for the sequence rescaled by s: both sides pick up the exact
// positive factor s(n)/s(n-1).
BoundPair scale_bounds(const BoundPair& pair, const RationalFunction& s);

// b_n ~ lambda (1 + c_1/n + ... + c_K/n^K), solved order by order from
// b_{n+1} b_n = R_1(n) b_n + R_2(n). Requires finite coefficient limits
// and a characteristic equation with two real roots of distinct absolute
// value whose dominant root is rational and nonzero.
struct RatioExpansion {
    Rational lambda;
    std::vector<Rational> c;  // c_1 .. c_K

    // lambda (n^K + c_1 n^{K-1} + ... + c_K) / n^K
    RationalFunction truncation() const;
};

RatioExpansion expand_ratio(const Recurrence& rec, int K);

// A replayable proof that l(n) <= b_n <= h(n) for all n >= base_index
// (strictly above the base index): one exact base check plus two hold-point
// computations for the interval-induction step of the ratio map
// T_n(x) = R_1(n) + R_2(n)/x, whose monotonicity direction is the sign
// of R_2 on [base_index, oo).
struct BoundCertificate {
    index_t base_index = 0;
    Rational base_l, base_b, base_h;  // l(N1) <= b_{N1} <= h(N1), exact values
    bool map_decreasing = true;       // R_2 > 0 on the range; false means R_2 < 0
    index_t induction_lower_hold = 0;  // hold point of the lower induction inequality
    index_t induction_upper_hold = 0;  // hold point of the upper induction inequality
    RationalFunction l, h;
};

// Verifies the base case exactly and the two inductive inequalities via
// hold points at N1; throws inapplicable_error with the failing stage.
BoundCertificate certify_b_bounds(SequenceCache& cache, const RationalFunction& l,
                                  const RationalFunction& h, index_t n1);

// Re-runs every check recorded in the certificate from scratch.
bool replay_certificate(SequenceCache& cache, const BoundCertificate& cert);

struct ProposedBounds {
    BoundCertificate cert;
    Rational margin;   // the accepted c in l,h = truncation -/+ c/n^K
    int attempts = 0;  // certification attempts consumed
};

// Margin search around the truncated ratio expansion: doubles c from 1 and
// retries N1 over {hint, 10, 20, 50, 100, 250, 500} with a 40-attempt budget.
ProposedBounds propose_bounds(SequenceCache& cache, int K, index_t n1_hint = 0);

// g(n) = l(n)/h(n-1), f(n) = h(n)/l(n-1), valid from base_index + 1.
BoundPair u_bounds_from_b(const BoundCertificate& cert);

struct BoundViolation {
    index_t n;
    enum class Kind { below_lower, above_upper, pole } kind;
    bool boundary = false;  // exact equality with a bound
};

// Exact check of g(n) < u_n < f(n) on [lo, hi]; empty result = verified.
std::vector<BoundViolation> verify_bounds_scan(SequenceCache& cache, const BoundPair& pair,
                                               index_t lo, index_t hi);

}  // namespace holocert
