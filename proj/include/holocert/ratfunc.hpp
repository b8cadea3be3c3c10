#pragma once

// Rational functions over Q in one formal variable, kept canonical:
// gcd(num, den) = 1 and a monic denominator. Equality is structural
// equality of the canonical form.
//
// hold_point() is the integer positivity primitive used throughout the
// threshold machinery: the least N >= n_min from which a function is
// pole-free and strictly positive at every integer, decided exactly by
// a root-magnitude bound plus an integer scan.

#include "holocert/poly.hpp"
#include "holocert/rational.hpp"

#include <optional>
#include <string>

namespace holocert {

class RationalFunction {
public:
    RationalFunction() = default;  // zero
    RationalFunction(const Poly& num) : num_(num), den_(Rational(1)) {}  // NOLINT
    RationalFunction(const Rational& c) : num_(Poly(c)), den_(Rational(1)) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
    RationalFunction(Poly num, Poly den);

    static RationalFunction variable() { return RationalFunction(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // f(x + k).
    RationalFunction shifted(const Rational& k) const;

    RationalFunction derivative() const;

    // Integer exponents; negative ones invert (requires a nonzero function).
    RationalFunction pow(long e) const;

    // Throws pole_error when the denominator vanishes at x.
    Rational eval(const Rational& x) const;

    bool has_pole_at(const Rational& x) const { return den_.eval(x) == 0; }

    std::string str(const std::string& var) const;

private:
    void normalize();
    Poly num_;
    Poly den_{Rational(1)};
};

enum class EventualSign { negative, zero, positive };

// Sign of f(x) as x -> +infinity; zero only for the zero function.
EventualSign eventual_sign(const RationalFunction& f);

// An exact integer B such that every real root of p (and hence every
// integer sign change) satisfies |x| <= B. Uses the better of the
// Cauchy bound 1 + max|c_i/c_lead| and the Fujiwara-style bound
// 2 max_i (|c_i/c_lead|)^(1/(d-i)), both rounded up exactly.
Int root_magnitude_bound(const Poly& p);

// Least integer N >= n_min such that f has no pole at any integer >= N
// and f(n) > 0 for every integer n >= N; nullopt ("never") iff the
// eventual sign of f is not positive. Poles at integers in the scanned
// region make those integers non-holding.
std::optional<index_t> hold_point(const RationalFunction& f, index_t n_min);

}  // namespace holocert
