#pragma once

#include <cstdio>
#include <numeric>
#include <string>

namespace steiner {

/// Exact fraction, always normalized (den > 0, gcd(num,den) = 1).
/// Closed-form index values must compare exactly, so no floating point here;
/// comparisons cross-multiply in 128-bit to dodge overflow.
struct Rational {
    long long num = 0;
    long long den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    /// Display form, 6 significant digits.
    std::string to_decimal() const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", to_double());
        return buf;
    }
};

inline Rational make_rational(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den == 0 ? 1 : den};
}

inline bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}

inline bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

} // namespace steiner
