#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "divcheck/errors.hpp"

namespace divcheck {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Requires is_integer(q) and a value that fits in long.
inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::invalid_argument("rational is not an integer: " + q.str());
    return numerator(q).convert_to<long>();
}

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline BigInt int_pow(BigInt base, unsigned long exp) {
    BigInt result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

/// base^exp with exp possibly negative; base must be nonzero for exp < 0.
inline Rational rat_pow(const Rational& base, long exp) {
    if (exp < 0 && base == 0) throw DomainError("0 raised to a negative power");
    unsigned long mag = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rational r(int_pow(numerator(base), mag), int_pow(denominator(base), mag));
    if (exp < 0) r = Rational(denominator(r) * (r < 0 ? -1 : 1), abs(numerator(r)));
    return r;
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// power with small nonnegative integer exponent, generic over the scalar backend
template <class T>
T power_nonneg(const T& base, long exp) {
    T result(1);
    T b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e > 0) {
        if (e & 1) result = result * b;
        b = b * b;
        e >>= 1;
    }
    return result;
}

template <class T>
T power_int(const T& base, long exp) {
    if (exp >= 0) return power_nonneg(base, exp);
    return T(1) / power_nonneg(base, -exp);
}

template <class T>
T scalar_from(const Rational& q);

template <>
inline double scalar_from<double>(const Rational& q) { return to_double(q); }

template <>
inline Rational scalar_from<Rational>(const Rational& q) { return q; }

template <class T>
T abs_value(const T& x) { return x < 0 ? T(-x) : x; }

/// Parses "p/q", integers, and plain decimals ("0.25", "-3", "1e-2") exactly.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw ParseError("cannot parse rational: '" + std::string(text) + "'"); };
    if (text.empty()) fail();

    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::string num(text.substr(0, slash)), den(text.substr(slash + 1));
        if (num.empty() || den.empty()) fail();
        try {
            Rational r{BigInt(num), BigInt(den)};
            return r;
        } catch (const std::exception&) {
            fail();
        }
    }

    // decimal form: [sign] digits [. digits] [e|E [sign] digits]
    bool negative = false;
    size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    BigInt mantissa = 0;
    long frac_digits = 0, exponent10 = 0;
    bool any_digit = false, seen_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            mantissa = mantissa * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            any_digit = true;
        } else if (c == '.') {
            if (seen_dot) fail();
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            ++i;
            bool eneg = false;
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                eneg = text[i] == '-';
                ++i;
            }
            if (i >= text.size()) fail();
            long e = 0;
            for (; i < text.size(); ++i) {
                if (text[i] < '0' || text[i] > '9') fail();
                e = e * 10 + (text[i] - '0');
                if (e > 1000000) fail();
            }
            exponent10 = eneg ? -e : e;
            break;
        } else {
            fail();
        }
    }
    if (!any_digit) fail();
    long net = exponent10 - frac_digits;
    Rational r(mantissa, 1);
    if (net > 0) r *= Rational(int_pow(BigInt(10), static_cast<unsigned long>(net)), 1);
    if (net < 0) r /= Rational(int_pow(BigInt(10), static_cast<unsigned long>(-net)), 1);
    return negative ? Rational(-r) : r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace divcheck
