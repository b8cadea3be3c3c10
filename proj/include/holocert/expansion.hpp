#pragma once

// Formal asymptotic expansions u_n = 1 + sum_i r_i(log n)/n^{alpha_i} + o(n^-beta)
// with rational exponents and rational-function coefficients in L = log n,
// plus the decision procedures for higher-order log-monotonicity and the
// order-two Laguerre inequality, with leading-term diagnostics.

#include "holocert/ratfunc.hpp"
#include "holocert/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace holocert {

// Rational function in the abstract variable L standing for log n.
using LogRat = RationalFunction;

using BigFloat = boost::multiprecision::mpfr_float;

struct ExpansionTerm {
    Rational alpha;  // exponent of 1/n
    LogRat coeff;    // r(L)
};

struct Expansion {
    std::vector<ExpansionTerm> terms;  // strictly increasing alpha; zero coeffs permitted
    Rational beta;                     // remainder exponent: o(n^-beta)

    // Enforces 0 < alpha_1 < ... < alpha_m < beta.
    void validate() const;

    const Rational& alpha_first() const;
    const Rational& alpha_last() const;
    const LogRat& r_first() const;
};

// Appends zero-coefficient terms at alpha_1 + 1, alpha_1 + 2, ... below beta
// (skipping exponents already present). This is the padding convention used
// when a short expansion with a known remainder order meets the hypotheses
// of the classifiers; verdicts that depend on it carry used_padding = true.
Expansion pad_integer_steps(Expansion e);

// Coefficients r_1..r_K of r(log(n+1)) - r(log n) = sum r_i(log n)/n^i + o(n^-K)
// (direction +1), or of r(log(n-1)) - r(log n) (direction -1). Computed by
// formal composition with the exact series of log(1 +/- 1/n).
// Identities: r_1 = r' (direction +1), = -r' (direction -1);
// r_2 = (r'' - r')/2 for both directions.
std::vector<LogRat> shift_expand(const LogRat& r, int K, int direction);

struct LeadingTerm {
    Rational exponent;  // quantity ~ coeff(log n) * n^exponent
    LogRat coeff;
};

enum class Lemma21Branch { A, B, C };

// Leading term of the three estimation quantities for xi(n) = r(log n)/n^gamma:
//   A: (n+1)^a xi(n) - n^a xi(n+1)                         -> (a-g-1,   (a+g) r)
//   B: xi(n+1)(n-1)^a n^a + xi(n-1)(n+1)^a n^a
//      - 2 xi(n)(n-1)^a (n+1)^a                            -> (2a-g-2,  (a+g)(a+g+1) r)
//   C: xi(n-1) xi(n+1) n^{2a} - xi(n)^2 (n+1)^a (n-1)^a    -> (2a-2g-2, (a+g) r^2)
LeadingTerm lemma21_leading(const LogRat& r, const Rational& gamma, const Rational& alpha,
                            Lemma21Branch which);

struct PredictedLeading {
    int sign;           // +1 or -1
    Rational exponent;  // decay order: deviation ~ sign * coeff(log n) / n^exponent
    LogRat coeff;
};

struct ClassifierVerdict {
    bool holds = false;
    std::string branch;  // "r1-positive" | "i" | "ii" | "iii", or a reason when inconclusive
    long ell = 0;        // order of log-monotonicity (log-monotonicity verdicts only)
    std::optional<PredictedLeading> predicted;
    bool used_padding = false;  // the deciding alpha_m came from a zero padding term
};

// Sufficient criterion for ell-log-monotonicity with ell = floor(alpha_m/alpha_1):
// requires alpha_m - alpha_1 >= 1 and r_1 eventually positive; otherwise
// inconclusive (the criterion is one-sided).
ClassifierVerdict classify_logmono(const Expansion& e);

// Predicted leading deviation of the k-fold ratio-operator test value from 1:
// sign (-1)^k, decay exponent alpha_1 + k, coefficient (alpha_1)_k * r_1.
// Requires alpha_1 + k < beta.
PredictedLeading phi_leading_term(const Expansion& e, int k);

// Sufficient criterion for the order-two Laguerre inequality; three branches:
//   (i)   r_1 eventually positive,
//   (ii)  alpha_1 < 2 and r_1 eventually negative,
//   (iii) alpha_1 = 2 and r_1 < -1 eventually.
ClassifierVerdict classify_laguerre2(const Expansion& e);

// Predicted leading term of f(n) = u_{n-1} u_n^2 u_{n+1} - 4 u_n + 3 as a
// decay order: alpha_1 > 2 -> (alpha_1 + 2, (alpha_1^2 + alpha_1) r_1);
// alpha_1 < 2 -> (2 alpha_1, 6 r_1^2); alpha_1 = 2 -> (4, 6 r_1 (1 + r_1)),
// which at the tie is the exact sum of both competing contributions.
LeadingTerm laguerre2_asymptotic(const Expansion& e);

// Growth orders of the four intermediate quantities t_1..t_4 behind
// laguerre2_asymptotic, exposed for testing:
// t_1: (3a-2, (a^2+a) r_1), t_2: (2a, 6 r_1^2), t_3: (a, 4 r_1^3), t_4: (0, r_1^4).
std::array<LeadingTerm, 4> laguerre2_t_terms(const Expansion& e);

// Evaluates 1 + sum r_i(log n)/n^{alpha_i} with relative error below 1e-20,
// by escalating MPFR precision until two consecutive evaluations agree to
// 1e-25. Never used on a certification path.
BigFloat numeric_eval(const Expansion& e, index_t n);

// RAII guard for the global MPFR default precision (decimal digits).
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits10);
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Evaluates a rational function at an MPFR point (no certification use).
BigFloat eval_bigfloat(const RationalFunction& f, const BigFloat& x);

}  // namespace holocert
