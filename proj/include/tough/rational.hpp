#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tough {

// Exact non-negative fraction, always reduced, den >= 1.
// Values arising here are ratios of vertex counts, so int64 never overflows
// (cross products stay far below 2^62 for any graph this toolkit accepts).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;

    Rational(std::int64_t n, std::int64_t d) {
        if (d <= 0) throw std::invalid_argument("rational: denominator must be positive");
        if (n < 0) throw std::invalid_argument("rational: negative value");
        std::int64_t g = std::gcd(n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }

    static Rational integer(std::int64_t n) { return Rational(n, 1); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    Rational abs_diff(const Rational& o) const {
        std::int64_t a = num * o.den, b = o.num * den;
        std::int64_t d = a > b ? a - b : b - a;
        return Rational(d, den * o.den);
    }

    // "a/b"; integers print without the "/1"
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // always explicit "a/b" (wire format)
    std::string fraction_str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Accepts "a/b" or a bare non-negative integer "a". Anything else (including
// decimals) is rejected.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&]() -> std::runtime_error {
        return std::runtime_error("cannot parse rational '" + s + "' (expected a/b with integers)");
    };
    if (s.empty()) throw bad();
    auto parse_int = [&](const std::string& part) -> std::int64_t {
        if (part.empty() || part.size() > 18) throw bad();
        for (char c : part)
            if (c < '0' || c > '9') throw bad();
        return std::stoll(part);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s), 1);
    std::int64_t n = parse_int(s.substr(0, slash));
    std::int64_t d = parse_int(s.substr(slash + 1));
    if (d == 0) throw bad();
    return Rational(n, d);
}

}  // namespace tough
