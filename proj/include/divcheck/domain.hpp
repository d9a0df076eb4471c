#pragma once

#include <limits>
#include <optional>
#include <string>

#include "divcheck/rational.hpp"

namespace divcheck {

/// Open interval with optional (rational) endpoints; an absent endpoint is
/// unbounded. All catalog domains have endpoints in {0, -1} or are the line,
/// so rational endpoints lose nothing.
struct Domain {
    std::optional<Rational> lower;
    std::optional<Rational> upper;

    static Domain real_line() { return {}; }
    static Domain positive() { return {Rational(0), std::nullopt}; }
    static Domain greater_than(const Rational& lo) { return {lo, std::nullopt}; }
    static Domain open(const Rational& lo, const Rational& hi) { return {lo, hi}; }

    bool contains(const Rational& t) const {
        if (lower && !(t > *lower)) return false;
        if (upper && !(t < *upper)) return false;
        return true;
    }

    bool contains(double t) const {
        if (lower && !(t > to_double(*lower))) return false;
        if (upper && !(t < to_double(*upper))) return false;
        return true;
    }

    double lower_d() const {
        return lower ? to_double(*lower) : -std::numeric_limits<double>::infinity();
    }
    double upper_d() const {
        return upper ? to_double(*upper) : std::numeric_limits<double>::infinity();
    }

    std::string describe() const {
        std::string lo = lower ? lower->str() : "-inf";
        std::string hi = upper ? upper->str() : "inf";
        return "(" + lo + ", " + hi + ")";
    }
};

}  // namespace divcheck
