#pragma once

#include <optional>
#include <string>

#include "divcheck/rational.hpp"

namespace divcheck {

enum class ScalarMode { ExactRational, Float };

/// Backend knobs. ExactRational ignores the float-only fields; it is only
/// selectable when the inputs are rational and the function is
/// rational-valued at rational points (see exact_eligible()).
struct ScalarPolicy {
    ScalarMode mode = ScalarMode::ExactRational;
    /// Float mode: nodes closer than this fraction of the span are duplicates.
    double distinctness_threshold = 1e-10;
    /// Float mode: absolute half-width below which a value is classified
    /// Uncertain, on top of the computed rounding bound. 0 = computed only.
    double sign_margin = 0.0;
};

enum class SignLabel { Positive, Negative, Zero, Uncertain };

inline const char* to_string(SignLabel s) {
    switch (s) {
        case SignLabel::Positive: return "Positive";
        case SignLabel::Negative: return "Negative";
        case SignLabel::Zero: return "Zero";
        case SignLabel::Uncertain: return "Uncertain";
    }
    return "?";
}

/// A computed sign with its evidence. In exact mode the label is decided
/// exactly, error_bound is 0 and exact_value holds the rational. In float
/// mode the label is Zero/Uncertain when |value| <= error_bound, depending
/// on whether an analytic oracle predicts zero.
struct SignClass {
    SignLabel label = SignLabel::Uncertain;
    double value = 0.0;
    double error_bound = 0.0;
    std::optional<Rational> exact_value;
};

inline SignClass exact_sign_class(const Rational& v) {
    SignClass s;
    s.value = to_double(v);
    s.error_bound = 0.0;
    s.exact_value = v;
    int sg = v.sign();
    s.label = sg > 0 ? SignLabel::Positive : (sg < 0 ? SignLabel::Negative : SignLabel::Zero);
    return s;
}

inline SignClass guarded_sign_class(double v, double error_bound, bool oracle_predicts_zero) {
    SignClass s;
    s.value = v;
    s.error_bound = error_bound;
    if (v > error_bound) {
        s.label = SignLabel::Positive;
    } else if (v < -error_bound) {
        s.label = SignLabel::Negative;
    } else {
        s.label = oracle_predicts_zero ? SignLabel::Zero : SignLabel::Uncertain;
    }
    return s;
}

}  // namespace divcheck
