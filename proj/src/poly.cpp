#include "holocert/poly.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <sstream>

namespace holocert {

namespace {
const Rational kZero(0);
}

Poly Poly::variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

void Poly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coef_.size())) return kZero;
    return coef_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
    if (coef_.empty()) return kZero;
    return coef_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.coef_.size() + b.coef_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i)
        for (std::size_t j = 0; j < b.coef_.size(); ++j) out[i + j] += a.coef_[i] * b.coef_[j];
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coef_.clear();
        return *this;
    }
    for (auto& x : coef_) x *= c;
    return *this;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coef_.size() <= 1) return Poly();
    std::vector<Rational> out(coef_.size() - 1);
    for (std::size_t i = 1; i < coef_.size(); ++i) out[i - 1] = coef_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::shifted(const Rational& k) const {
    // Horner in (x + k).
    Poly shift_var(std::vector<Rational>{k, Rational(1)});
    Poly acc;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * shift_var + Poly(*it);
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error("polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& blead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational factor = rem.leading() / blead;
        q[static_cast<std::size_t>(shift)] = factor;
        std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
        for (const auto& c : b.coef_) sub.push_back(c * factor);
        rem -= Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r).monic();  // normalize each step to tame coefficient growth
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    Rational inv = Rational(1) / leading();
    for (auto& c : r.coef_) c *= inv;
    return r;
}

Poly::IntPoly Poly::integerized() const {
    IntPoly out;
    out.scale = 1;
    for (const auto& c : coef_) out.scale = lcm(out.scale, denominator(c));
    out.coef.reserve(coef_.size());
    for (const auto& c : coef_) out.coef.push_back(numerator(c) * (out.scale / denominator(c)));
    return out;
}

Int Poly::IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1) && i > 0;
        if (!unit) {
            bool needs_parens = denominator(mag) != 1;
            if (needs_parens) os << "(" << to_string(mag) << ")";
            else os << to_string(mag);
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace holocert
