#include "cellform/rational.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace cellform {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::string Rational::percent() const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * value());
    return buf;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, magnitudes small; cross-multiply is safe.
    return a.num * b.den <=> b.num * a.den;
}

}  // namespace cellform
