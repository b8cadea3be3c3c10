#pragma once

// Exact arbitrary-precision integers and rationals (GMP-backed).
// All certification arithmetic in this library goes through these types;
// no floating point is used anywhere on a certification path.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace holocert {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using index_t = std::int64_t;

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation at a pole, or a pole inside a required index range.
struct pole_error : error {
    using error::error;
};

// Index outside the defined range of a sequence or window.
struct index_error : error {
    using error::error;
};

// A ratio-based operation met a zero or non-positive term.
struct sign_error : error {
    using error::error;
};

// A theorem or method does not apply to the given input
// (hold point "never", obstructed expansion, exhausted search budget, ...).
struct inapplicable_error : error {
    using error::error;
};

// Malformed textual input; `position` is a 0-based byte offset.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Int& z) { return z.sign(); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// floor(q) for a rational q.
inline Int rational_floor(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

inline Int rational_ceil(const Rational& q) {
    return -rational_floor(-q);
}

// Exact q^e for integer e (e < 0 requires q != 0).
Rational pow_int(const Rational& q, long e);

// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, int k);

// Checked narrowing for indices derived from big-integer bounds.
index_t to_index(const Int& z);

// Parses "p/q" or "p" (optional leading '-'); result is canonical.
Rational parse_rational(const std::string& text);

// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

// C(n, k) as an exact integer; zero when k < 0 or k > n.
Int binomial(long n, long k);

}  // namespace holocert
