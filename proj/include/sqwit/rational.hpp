#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <type_traits>

#include "sqwit/errors.hpp"

namespace sqwit {

/// Exact arbitrary-precision rational, the backbone of every identity check.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q", "p" or a decimal like "0.25" into an exact rational.
/// Base 10 throughout (GMP would otherwise read leading zeros as octal).
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational r(text, 10);
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational r(text, 10);
        r.canonicalize();
        return r;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    std::string den = "1" + std::string(frac_len, '0');
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits = digits.substr(1);
    if (digits.empty()) throw DomainError("cannot parse rational: " + text);
    Rational r = Rational(Rational(digits, 10) / Rational(den, 10));
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

namespace num {

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
T from_int(long n) {
    return T(n);
}

/// x^n for integer n (negative n inverts; exact on rationals).
template <class T>
T pow_int(const T& x, long n) {
    if (n < 0) {
        if (x == T(0)) throw DomainError("pow_int: 0 to a negative power");
        return T(1) / pow_int(x, -n);
    }
    T result(1), base = x;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

template <class T>
T abs_val(const T& x) {
    return x < T(0) ? T(-x) : x;
}

} // namespace num
} // namespace sqwit
