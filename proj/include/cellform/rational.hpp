#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cellform {

// Exact ratio of small integers. Grouping efficacy is compared tie-exact
// inside the improvement loop, so it stays rational until rendering.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    // Percentage with two decimals, e.g. "73.68".
    std::string percent() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

}  // namespace cellform
