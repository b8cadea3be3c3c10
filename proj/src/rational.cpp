#include "holocert/rational.hpp"

#include <limits>

namespace holocert {

Rational pow_int(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw pole_error("0 raised to a negative power");
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational base = q, acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    if (invert) acc = Rational(1) / acc;
    return acc;
}

Rational pochhammer(const Rational& a, int k) {
    Rational acc(1);
    for (int i = 0; i < k; ++i) acc *= a + i;
    return acc;
}

index_t to_index(const Int& z) {
    if (z > std::numeric_limits<index_t>::max() / 4 || z < std::numeric_limits<index_t>::min() / 4)
        throw error("index magnitude out of range: " + z.str());
    return static_cast<index_t>(z);
}

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw error("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw parse_error("invalid rational literal '" + text + "'", 0);
    }
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int acc(1);
    for (long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact at every step
    }
    return acc;
}

}  // namespace holocert
