#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divcheck/functions.hpp"
#include "divcheck/nodes.hpp"

namespace divcheck {

// ---------------------------------------------------------------------------
// Core algorithms. Both compute f[x_1,...,x_n]; the direct symmetric sum is
// the defining formula, the triangular recurrence is the numerically stabler
// production route. In exact arithmetic they agree bit for bit.
// ---------------------------------------------------------------------------

/// Triangular recurrence over precomputed values; xs must be ascending and
/// pairwise distinct. Builds the table column by column for deterministic
/// rounding.
template <class T>
T divdiff_values(const std::vector<T>& xs, std::vector<T> fv) {
    const size_t n = xs.size();
    if (fv.size() != n || n < 1) throw std::invalid_argument("divdiff_values size mismatch");
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = 0; i + level < n; ++i) {
            fv[i] = (fv[i + 1] - fv[i]) / (xs[i + level] - xs[i]);
        }
    }
    return fv[0];
}

template <class T>
T divdiff_direct(const FunctionSpec& f, const NodeSet<T>& nodes) {
    const std::vector<T>& xs = nodes.sorted();
    const size_t n = xs.size();
    T total(0);
    for (size_t j = 0; j < n; ++j) {
        T denom(1);
        for (size_t k = 0; k < n; ++k) {
            if (k != j) denom = denom * (xs[j] - xs[k]);
        }
        total = total + eval(f, xs[j]) / denom;
    }
    return total;
}

template <class T>
T divdiff_recurrence(const FunctionSpec& f, const NodeSet<T>& nodes) {
    const std::vector<T>& xs = nodes.sorted();
    std::vector<T> fv;
    fv.reserve(xs.size());
    for (const T& x : xs) fv.push_back(eval(f, x));
    return divdiff_values(xs, std::move(fv));
}

/// Divided difference over an ad-hoc point multiset (sorts, rejects
/// collisions). Used for the mixed node sets of the chain identity and the
/// mean-value locators.
template <class T>
T divdiff_points(const FunctionSpec& f, std::vector<T> pts) {
    std::sort(pts.begin(), pts.end());
    for (size_t i = 1; i < pts.size(); ++i) {
        if (pts[i] == pts[i - 1]) throw NodeCollisionError("mixed node multiset has duplicates");
    }
    std::vector<T> fv;
    fv.reserve(pts.size());
    for (const T& x : pts) fv.push_back(eval(f, x));
    return divdiff_values(pts, std::move(fv));
}

/// Divided difference of f' over the given nodes (values of the closed-form
/// first derivative fed through the recurrence).
template <class T>
T divdiff_of_derivative(const FunctionSpec& f, const NodeSet<T>& nodes) {
    const std::vector<T>& xs = nodes.sorted();
    std::vector<T> fv;
    fv.reserve(xs.size());
    for (const T& x : xs) fv.push_back(eval_derivative(f, 1, x));
    return divdiff_values(xs, std::move(fv));
}

/// Sum of |f(x_j)| / prod |x_j - x_k|, the cancellation mass of the direct
/// formula; condition_estimate = this / |value|.
template <class T>
double divdiff_term_mass(const FunctionSpec& f, const NodeSet<T>& nodes) {
    const std::vector<T>& xs = nodes.sorted();
    const size_t n = xs.size();
    double total = 0;
    for (size_t j = 0; j < n; ++j) {
        double denom = 1;
        for (size_t k = 0; k < n; ++k) {
            if (k != j) denom *= std::abs(to_double(xs[j]) - to_double(xs[k]));
        }
        total += std::abs(to_double(eval(f, xs[j]))) / denom;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Evaluation report
// ---------------------------------------------------------------------------

struct MethodValue {
    std::string name;
    double value = 0.0;
    std::optional<Rational> exact;
    bool float_method = false;  // participates in the spread
};

struct EvalReport {
    std::vector<MethodValue> methods;  // canonical order
    double spread = 0.0;               // max pairwise |a-b| / max(1, |recommended|)
    double condition_estimate = std::numeric_limits<double>::infinity();
    double recommended = 0.0;
    std::optional<Rational> recommended_exact;
    ScalarMode mode = ScalarMode::Float;
    int n = 0;

    const MethodValue* find(const std::string& name) const {
        for (const auto& m : methods)
            if (m.name == name) return &m;
        return nullptr;
    }
};

struct ReportOptions {
    bool with_peano = true;    // float mode only, needs hull inside domain
    bool with_montecarlo = false;
    long mc_trials = 100000;
    uint64_t mc_seed = 1;
    double tol = 1e-10;
};

EvalReport divdiff_report(const FunctionSpec& f, const NodeSet<Rational>& nodes,
                          const ScalarPolicy& policy, const ReportOptions& options = {});
EvalReport divdiff_report(const FunctionSpec& f, const NodeSet<double>& nodes,
                          const ScalarPolicy& policy, const ReportOptions& options = {});

// ---------------------------------------------------------------------------
// Chain identity (telescoping between two (n-1)-point node lists):
//   f[x_1..x_m] - f[a_1..a_m] = sum_k (x_k - a_k) f[a_1..a_k, x_k..x_m]
// The residual is reported both without any prefactor and with the
// (n-1)/n-scaled left-hand side, so exact arithmetic can adjudicate which
// normalization holds.
// ---------------------------------------------------------------------------

template <class T>
struct ChainIdentity {
    T lhs;                    // f[x...] - f[a...]
    T rhs;                    // telescoping sum
    T residual;               // lhs - rhs
    T residual_prefactored;   // (n-1)/n * lhs - rhs
};

template <class T>
ChainIdentity<T> chain_identity_residual(const FunctionSpec& f, const NodeSet<T>& a_nodes,
                                         const NodeSet<T>& x_nodes) {
    if (a_nodes.size() != x_nodes.size()) {
        throw LengthMismatchError("chain identity requires equally sized node lists");
    }
    const std::vector<T>& as = a_nodes.original();
    const std::vector<T>& xs = x_nodes.original();
    const size_t m = as.size();          // m = n-1
    const long n = static_cast<long>(m) + 1;

    T lhs = divdiff_points(f, xs) - divdiff_points(f, as);
    T rhs(0);
    for (size_t k = 0; k < m; ++k) {
        std::vector<T> mixed;
        mixed.reserve(m + 1);
        for (size_t i = 0; i <= k; ++i) mixed.push_back(as[i]);
        for (size_t i = k; i < m; ++i) mixed.push_back(xs[i]);
        rhs = rhs + (xs[k] - as[k]) * divdiff_points(f, mixed);
    }
    T prefactor = T(n - 1) / T(n);
    return {lhs, rhs, lhs - rhs, prefactor * lhs - rhs};
}

}  // namespace divcheck
