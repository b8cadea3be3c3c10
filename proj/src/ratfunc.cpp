#include "holocert/ratfunc.hpp"

#include <algorithm>

namespace holocert {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    // Monic denominator makes the representation unique.
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::shifted(const Rational& k) const {
    return RationalFunction(num_.shifted(k), den_.shifted(k));
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction(Rational(1));
    if (is_zero() && e < 0) throw error("negative power of the zero function");
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RationalFunction base = *this, acc(Rational(1));
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    if (invert) acc = RationalFunction(Rational(1)) / acc;
    return acc;
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw pole_error("pole at " + to_string(x));
    return num_.eval(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_ == Poly(Rational(1))) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

EventualSign eventual_sign(const RationalFunction& f) {
    if (f.is_zero()) return EventualSign::zero;
    // Denominator is monic, so the sign at infinity is the numerator's.
    return f.num().leading() > 0 ? EventualSign::positive : EventualSign::negative;
}

Int root_magnitude_bound(const Poly& p) {
    if (p.degree() <= 0) return Int(0);
    const Rational lead_abs = p.leading() < 0 ? Rational(-p.leading()) : p.leading();
    // Cauchy: 1 + max |c_i / c_d|.
    Rational max_ratio(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = p.coeff(i) / lead_abs;
        if (r < 0) r = -r;
        if (r > max_ratio) max_ratio = r;
    }
    Int cauchy = rational_ceil(Rational(1) + max_ratio);
    // Fujiwara: 2 max_i |c_i/c_d|^(1/(d-i)), rounded up via integer roots.
    Int fujiwara(0);
    for (int i = 0; i < p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        Rational r = p.coeff(i) / lead_abs;
        if (r < 0) r = -r;
        unsigned k = static_cast<unsigned>(p.degree() - i);
        Int ceil_r = rational_ceil(r);
        Int root(1);
        if (ceil_r > 1) {
            // floor k-th root, then round up so root^k >= r.
            mpz_root(root.backend().data(), ceil_r.backend().data(), k);
            Int powed = boost::multiprecision::pow(root, k);
            if (Rational(powed) < r) ++root;
        }
        Int cand = 2 * root;
        if (cand > fujiwara) fujiwara = cand;
    }
    Int bound = std::min(cauchy, fujiwara);
    if (bound < 0) bound = 0;
    return bound;
}

std::optional<index_t> hold_point(const RationalFunction& f, index_t n_min) {
    if (eventual_sign(f) != EventualSign::positive) return std::nullopt;
    Int bound = std::max(root_magnitude_bound(f.num()), root_magnitude_bound(f.den()));
    index_t scan_hi = std::max(n_min, to_index(bound) + 1);
    Poly::IntPoly num = f.num().integerized();
    Poly::IntPoly den = f.den().integerized();
    index_t candidate = n_min;
    for (index_t n = n_min; n <= scan_hi; ++n) {
        Int x(n);
        int ds = den.sign_at(x);
        if (ds == 0 || num.sign_at(x) * ds <= 0) candidate = n + 1;
    }
    return candidate;
}

}  // namespace holocert
