#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "divcheck/domain.hpp"
#include "divcheck/errors.hpp"
#include "divcheck/rational.hpp"

namespace divcheck {

// ---------------------------------------------------------------------------
// Catalog variants. Every variant has closed-form derivatives of all orders;
// nothing in the library differentiates numerically.
// ---------------------------------------------------------------------------

/// sum_k coeffs[k] * t^k. Also hosts the constant and affine cases.
struct Polynomial {
    std::vector<Rational> coeffs;
    bool operator==(const Polynomial&) const = default;
};

/// t^degree on the whole line, degree >= 0.
struct Monomial {
    int degree = 0;
    bool operator==(const Monomial&) const = default;
};

/// t^{-s} on (0, inf). The exponent may be any rational; only integer
/// exponents are exact-eligible.
struct ReciprocalPower {
    Rational exponent;  // s
    bool operator==(const ReciprocalPower&) const = default;
};

/// t^{r} on (0, inf).
struct PowerLaw {
    Rational exponent;  // r
    bool operator==(const PowerLaw&) const = default;
};

/// base^t on the whole line, base > 0.
struct Exponential {
    double base = 2.0;
    bool operator==(const Exponential&) const = default;
};

/// H(s) = s^{n-2} G(1/s) for a Laplace transform G.
///   Power:    G(s) = s^{-(q+1)}  (transform of t^q/q!), so H(s) = s^{q+n-1}
///   ExpDecay: G(s) = 1/(1+s)     (transform of e^{-t}),  so H(s) = s^{n-1}/(s+1)
struct RationalH {
    enum class Kind { Power, ExpDecay };
    Kind kind = Kind::Power;
    int q = 0;  // Power only
    int n = 2;
    bool operator==(const RationalH&) const = default;
};

using FunctionSpec =
    std::variant<Polynomial, Monomial, ReciprocalPower, PowerLaw, Exponential, RationalH>;

inline FunctionSpec constant(Rational c) { return Polynomial{{std::move(c)}}; }
inline FunctionSpec affine(Rational intercept, Rational slope) {
    return Polynomial{{std::move(intercept), std::move(slope)}};
}

// ---------------------------------------------------------------------------
// Domains and backend eligibility
// ---------------------------------------------------------------------------

inline Domain domain_of(const FunctionSpec& f) {
    return std::visit(
        [](const auto& v) -> Domain {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, ReciprocalPower> || std::is_same_v<V, PowerLaw>) {
                return Domain::positive();
            } else if constexpr (std::is_same_v<V, RationalH>) {
                return v.kind == RationalH::Kind::ExpDecay ? Domain::greater_than(Rational(-1))
                                                           : Domain::real_line();
            } else {
                return Domain::real_line();
            }
        },
        f);
}

/// True when the function is rational-valued with rational derivatives at
/// rational points, i.e. usable with the ExactRational backend.
inline bool exact_eligible(const FunctionSpec& f) {
    return std::visit(
        [](const auto& v) -> bool {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, Polynomial> || std::is_same_v<V, Monomial> ||
                          std::is_same_v<V, RationalH>) {
                return true;
            } else if constexpr (std::is_same_v<V, ReciprocalPower> ||
                                 std::is_same_v<V, PowerLaw>) {
                return is_integer(v.exponent);
            } else {
                return false;  // Exponential
            }
        },
        f);
}

// ---------------------------------------------------------------------------
// Evaluation and closed-form derivatives
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
T checked_input(const FunctionSpec& f, const T& t) {
    if (!domain_of(f).contains(t)) {
        throw DomainError("argument outside function domain " + domain_of(f).describe());
    }
    return t;
}

// falling factorial d (d-1) ... (d-k+1) as an exact integer
inline BigInt falling(long d, int k) {
    BigInt p = 1;
    for (int i = 0; i < k; ++i) p *= BigInt(d - i);
    return p;
}

template <class T>
T poly_derivative(const Polynomial& f, int order, const T& t) {
    // derive coefficients exactly, evaluate by Horner on the derived poly
    const long deg = static_cast<long>(f.coeffs.size()) - 1;
    if (order > deg) return T(0);
    T acc(0);
    for (long j = deg; j >= order; --j) {
        Rational coef = f.coeffs[static_cast<size_t>(j)] * Rational(falling(j, order), 1);
        acc = acc * t + scalar_from<T>(coef);
    }
    return acc;
}

template <class T>
T monomial_derivative(const Monomial& f, int order, const T& t) {
    if (order > f.degree) return T(0);
    Rational coef(falling(f.degree, order), 1);
    return scalar_from<T>(coef) * power_nonneg(t, f.degree - order);
}

// d^k/dt^k of t^e for a real (rational) exponent e: e(e-1)...(e-k+1) t^{e-k}
inline Rational real_power_coef(const Rational& e, int order) {
    Rational c(1);
    for (int i = 0; i < order; ++i) c *= (e - i);
    return c;
}

inline double real_power_eval(const Rational& e, int order, double t) {
    double c = to_double(real_power_coef(e, order));
    if (c == 0.0) return 0.0;
    return c * std::pow(t, to_double(e) - order);
}

inline Rational real_power_eval(const Rational& e, int order, const Rational& t) {
    // exact path: requires integer exponent
    Rational c = real_power_coef(e, order);
    if (c == 0) return Rational(0);
    return c * rat_pow(t, to_long(e - order));
}

template <class T>
T recip_derivative(const ReciprocalPower& f, int order, const T& t) {
    return real_power_eval(-f.exponent, order, t);
}

template <class T>
T powerlaw_derivative(const PowerLaw& f, int order, const T& t) {
    return real_power_eval(f.exponent, order, t);
}

inline double exponential_derivative(const Exponential& f, int order, double t) {
    if (f.base == 1.0) return order == 0 ? 1.0 : 0.0;
    double lg = std::log(f.base);
    return std::pow(f.base, t) * power_nonneg(lg, order);
}

// H(s) = s^{n-1}/(s+1) = Q(s) + (-1)^{n-1}/(s+1) with
// Q(s) = sum_{j=0}^{n-2} (-1)^{n-2-j} s^j, by polynomial division.
template <class T>
T rationalh_expdecay_derivative(int n, int order, const T& s) {
    T acc(0);
    for (long j = n - 2; j >= order; --j) {
        long sign = ((n - 2 - j) % 2 == 0) ? 1 : -1;
        Rational coef = Rational(sign) * Rational(falling(j, order), 1);
        acc = acc * s + scalar_from<T>(coef);
    }
    // remainder term: (-1)^{n-1} * (-1)^order * order! / (s+1)^{order+1}
    long rsign = (((n - 1) + order) % 2 == 0) ? 1 : -1;
    Rational rc = Rational(rsign) * Rational(factorial(order), 1);
    T denom = power_nonneg(s + T(1), order + 1);
    return acc + scalar_from<T>(rc) / denom;
}

}  // namespace detail

template <class T>
T eval_derivative(const FunctionSpec& f, int order, const T& t) {
    if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
    detail::checked_input(f, t);
    return std::visit(
        [&](const auto& v) -> T {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, Polynomial>) {
                return detail::poly_derivative(v, order, t);
            } else if constexpr (std::is_same_v<V, Monomial>) {
                return detail::monomial_derivative(v, order, t);
            } else if constexpr (std::is_same_v<V, ReciprocalPower>) {
                return detail::recip_derivative(v, order, t);
            } else if constexpr (std::is_same_v<V, PowerLaw>) {
                return detail::powerlaw_derivative(v, order, t);
            } else if constexpr (std::is_same_v<V, Exponential>) {
                if constexpr (std::is_same_v<T, double>) {
                    return detail::exponential_derivative(v, order, t);
                } else {
                    throw std::invalid_argument("Exponential is not exact-eligible");
                }
            } else {  // RationalH
                if (v.kind == RationalH::Kind::Power) {
                    return detail::monomial_derivative(Monomial{v.q + v.n - 1}, order, t);
                }
                return detail::rationalh_expdecay_derivative(v.n, order, t);
            }
        },
        f);
}

template <class T>
T eval(const FunctionSpec& f, const T& t) {
    return eval_derivative(f, 0, t);
}

// ---------------------------------------------------------------------------
// Sign and convexity certificates for derivatives on an interval.
// Used by the Farwig--Zwick gate and the directional sign-law tests.
// ---------------------------------------------------------------------------

enum class IntervalSign { Zero, Positive, Negative, NonNegative, NonPositive, Mixed, Unknown };

namespace detail {

// sign of c * t^m on [lo, hi] (endpoints included, hull of a node set)
inline IntervalSign power_term_sign(const Rational& c, long m, double lo, double hi) {
    if (c == 0) return IntervalSign::Zero;
    bool cpos = c > 0;
    IntervalSign pos = cpos ? IntervalSign::Positive : IntervalSign::Negative;
    IntervalSign neg = cpos ? IntervalSign::Negative : IntervalSign::Positive;
    IntervalSign nonneg = cpos ? IntervalSign::NonNegative : IntervalSign::NonPositive;
    if (m == 0) return pos;
    if (lo > 0) return pos;
    if (hi < 0) return (m % 2 == 0) ? pos : neg;
    // interval touches or straddles 0
    if (m % 2 == 0) return nonneg;
    if (lo == 0 && hi == 0) return IntervalSign::Zero;
    if (lo >= 0) return nonneg;
    if (hi <= 0) return cpos ? IntervalSign::NonPositive : IntervalSign::NonNegative;
    return IntervalSign::Mixed;
}

}  // namespace detail

/// Certified sign of f^{(order)} on the closed hull [lo, hi] (which must lie
/// inside the function's domain). Unknown when the catalog closed form does
/// not decide it.
inline IntervalSign derivative_sign_on(const FunctionSpec& f, int order, double lo, double hi) {
    return std::visit(
        [&](const auto& v) -> IntervalSign {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, Polynomial>) {
                const long deg = static_cast<long>(v.coeffs.size()) - 1;
                if (order > deg) return IntervalSign::Zero;
                if (order == deg) {
                    Rational c = v.coeffs.back() * Rational(detail::falling(deg, order), 1);
                    return c == 0 ? IntervalSign::Zero
                                  : (c > 0 ? IntervalSign::Positive : IntervalSign::Negative);
                }
                return IntervalSign::Unknown;
            } else if constexpr (std::is_same_v<V, Monomial>) {
                if (order > v.degree) return IntervalSign::Zero;
                return detail::power_term_sign(Rational(detail::falling(v.degree, order), 1),
                                               v.degree - order, lo, hi);
            } else if constexpr (std::is_same_v<V, ReciprocalPower>) {
                Rational c = detail::real_power_coef(-v.exponent, order);
                if (c == 0) return IntervalSign::Zero;
                return c > 0 ? IntervalSign::Positive : IntervalSign::Negative;  // t > 0
            } else if constexpr (std::is_same_v<V, PowerLaw>) {
                Rational c = detail::real_power_coef(v.exponent, order);
                if (c == 0) return IntervalSign::Zero;
                return c > 0 ? IntervalSign::Positive : IntervalSign::Negative;
            } else if constexpr (std::is_same_v<V, Exponential>) {
                if (v.base == 1.0) return order == 0 ? IntervalSign::Positive : IntervalSign::Zero;
                if (v.base > 1.0) return IntervalSign::Positive;
                return order % 2 == 0 ? IntervalSign::Positive : IntervalSign::Negative;
            } else {  // RationalH
                if (v.kind == RationalH::Kind::Power) {
                    return derivative_sign_on(Monomial{v.q + v.n - 1}, order, lo, hi);
                }
                return IntervalSign::Unknown;
            }
        },
        f);
}

/// Convexity certificate for f^{(order)} on [lo, hi], via the sign of
/// f^{(order+2)}; Unknown means not certified either way.
enum class Convexity { Convex, NotConvex, Unknown };

inline Convexity derivative_convexity_on(const FunctionSpec& f, int order, double lo, double hi) {
    switch (derivative_sign_on(f, order + 2, lo, hi)) {
        case IntervalSign::Zero:
        case IntervalSign::Positive:
        case IntervalSign::NonNegative:
            return Convexity::Convex;
        case IntervalSign::Negative:
        case IntervalSign::NonPositive:
            return Convexity::NotConvex;
        default:
            return Convexity::Unknown;
    }
}

// ---------------------------------------------------------------------------
// Selector grammar (CLI surface): canonical descriptions parse back to the
// same spec.
// ---------------------------------------------------------------------------

std::string describe(const FunctionSpec& f);

/// Accepts: monomial:<d>, recip:<s>, power:<r>, exp:<a|e>, const[:c],
/// affine:<a>,<b>, poly:<c0>,<c1>,..., rationalh:power:<q>:<n>,
/// rationalh:expdecay:<n>. Rational parameters use the parse_rational forms.
FunctionSpec parse_function(const std::string& selector);

}  // namespace divcheck
