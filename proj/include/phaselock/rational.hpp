#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "phaselock/errors.hpp"

namespace phaselock::confrac {

namespace detail {

inline std::int64_t narrow_i128(__int128 v, const char* what) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw numerical_error(std::string("rational overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Exact fraction with 64-bit parts. Always normalized: den > 0, gcd(|num|, den) = 1.
/// Every operation goes through 128-bit intermediates and throws on overflow,
/// so a wrong answer is never produced silently.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw parameter_error("rational: zero denominator");
        if (d < 0) {
            n = detail::narrow_i128(-static_cast<__int128>(n), "negate");
            d = detail::narrow_i128(-static_cast<__int128>(d), "negate");
        }
        const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        num = g ? n / g : n;
        den = g ? d / g : d;
    }

    static Rational from_i128(__int128 n, __int128 d, const char* what = "construct") {
        if (d == 0) throw parameter_error("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        Rational r;
        r.num = detail::narrow_i128(n, what);
        r.den = detail::narrow_i128(d, what);
        return r;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den, "add");
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den, "subtract");
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.num,
                         static_cast<__int128>(a.den) * b.den, "multiply");
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw parameter_error("rational: division by zero");
        return from_i128(static_cast<__int128>(a.num) * b.den,
                         static_cast<__int128>(a.den) * b.num, "divide");
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace phaselock::confrac
