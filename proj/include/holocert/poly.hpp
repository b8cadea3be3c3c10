#pragma once

// Dense univariate polynomials over the rationals, canonical form
// (no trailing zero coefficient). The formal variable is anonymous;
// callers decide whether it stands for the index n or for L = log n.

#include "holocert/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace holocert {

class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { coef_.push_back(c); trim(); }  // NOLINT: implicit constant lift
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : coef_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : coef_(coeffs) { trim(); }

    static Poly variable();  // x

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return coef_.size() <= 1; }

    // Coefficient of x^i (zero beyond the degree).
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coef_; }

    const Rational& leading() const;
    Rational constant_term() const { return coef_.empty() ? Rational(0) : coef_.front(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;

    Poly derivative() const;

    // p(x + k), exact composition.
    Poly shifted(const Rational& k) const;

    // Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    // Monic gcd (1 for coprime inputs, 0 only if both are zero).
    static Poly gcd(Poly a, Poly b);

    // Divides all coefficients by the leading one; zero stays zero.
    Poly monic() const;

    // Integer-coefficient image: coefficients scaled by the lcm of the
    // denominators. The scale is positive, so signs are preserved.
    struct IntPoly {
        std::vector<Int> coef;  // lowest degree first
        Int scale;              // this->coef[i] = scale * poly.coeff(i)
        Int eval(const Int& x) const;
        int sign_at(const Int& x) const { return eval(x).sign(); }
    };
    IntPoly integerized() const;

    std::string str(const std::string& var) const;

private:
    void trim();
    std::vector<Rational> coef_;  // lowest degree first
};

}  // namespace holocert
