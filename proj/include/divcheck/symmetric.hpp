#pragma once

#include <span>
#include <vector>

#include "divcheck/divdiff.hpp"
#include "divcheck/nodes.hpp"

namespace divcheck {

// ---------------------------------------------------------------------------
// Complete homogeneous symmetric polynomials h_q, with h_0 := 1.
// ---------------------------------------------------------------------------

/// Production path: one-variable-at-a-time accumulation,
/// h_d(x_1..x_j) = h_d(x_1..x_{j-1}) + x_j h_{d-1}(x_1..x_j).
template <class T>
T chs_fast(int q, std::span<const T> xs) {
    if (q < 0) throw std::invalid_argument("chs degree must be >= 0");
    std::vector<T> h(static_cast<size_t>(q) + 1, T(0));
    h[0] = T(1);
    for (const T& x : xs) {
        for (int d = 1; d <= q; ++d) h[d] = h[d] + x * h[d - 1];
    }
    return h[q];
}

/// Oracle path: explicit sum over weakly increasing index multisets
/// 1 <= j_1 <= ... <= j_q <= n, in lexicographic order.
template <class T>
T chs_enumerate_span(int q, std::span<const T> xs) {
    if (q < 0) throw std::invalid_argument("chs degree must be >= 0");
    if (q == 0) return T(1);
    const int n = static_cast<int>(xs.size());
    std::vector<int> idx(static_cast<size_t>(q), 0);
    T total(0);
    while (true) {
        T term(1);
        for (int i : idx) term = term * xs[static_cast<size_t>(i)];
        total = total + term;
        int pos = q - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        int next = idx[static_cast<size_t>(pos)] + 1;
        for (int i = pos; i < q; ++i) idx[static_cast<size_t>(i)] = next;
    }
    return total;
}

template <class T>
T chs_enumerate(int q, const NodeSet<T>& nodes) {
    return chs_enumerate_span<T>(q, nodes.sorted());
}

/// h_q via the divided difference of t^{q+n-1}; equals chs_enumerate exactly
/// in rational arithmetic.
template <class T>
T chs_via_divdiff(int q, const NodeSet<T>& nodes) {
    if (q < 0) throw std::invalid_argument("chs degree must be >= 0");
    return divdiff_recurrence(FunctionSpec{Monomial{q + nodes.size() - 1}}, nodes);
}

// ---------------------------------------------------------------------------
// Vandermonde and the bialternant identity
// ---------------------------------------------------------------------------

/// prod_{i<j} (x_j - x_i) over the ascending-sorted nodes (hence positive).
template <class T>
T vandermonde(const NodeSet<T>& nodes) {
    const std::vector<T>& xs = nodes.sorted();
    T prod(1);
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = i + 1; j < xs.size(); ++j) prod = prod * (xs[j] - xs[i]);
    }
    return prod;
}

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// row denominators.
Rational det_exact(std::vector<std::vector<Rational>> m);

/// Determinant by partially pivoted elimination, float backend.
double det_float(std::vector<std::vector<double>> m);

template <class T>
struct BialternantCheck {
    T lhs;  // h_q * V
    T rhs;  // det(1, x_i, ..., x_i^{n-2}, x_i^{q+n-1})
    bool equal;
};

template <class T>
BialternantCheck<T> bialternant_check(int q, const NodeSet<T>& nodes) {
    if (q < 0) throw std::invalid_argument("chs degree must be >= 0");
    const std::vector<T>& xs = nodes.sorted();
    const int n = nodes.size();
    std::vector<std::vector<T>> m(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = m[static_cast<size_t>(i)];
        row.reserve(static_cast<size_t>(n));
        for (int c = 0; c < n - 1; ++c) row.push_back(power_nonneg(xs[static_cast<size_t>(i)], c));
        row.push_back(power_nonneg(xs[static_cast<size_t>(i)], q + n - 1));
    }
    T lhs = chs_fast<T>(q, xs) * vandermonde(nodes);
    T rhs;
    bool equal;
    if constexpr (std::is_same_v<T, Rational>) {
        rhs = det_exact(std::move(m));
        equal = lhs == rhs;
    } else {
        rhs = det_float(std::move(m));
        double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        equal = std::abs(lhs - rhs) <= 1e-9 * scale;
    }
    return {lhs, rhs, equal};
}

// ---------------------------------------------------------------------------
// Hunter's lower bound for h_{2p}
// ---------------------------------------------------------------------------

/// (1/(2^p p!)) (x_1^2 + ... + x_n^2)^p
template <class T>
T hunter_bound(int p, const NodeSet<T>& nodes) {
    if (p < 0) throw std::invalid_argument("hunter bound requires p >= 0");
    T sumsq(0);
    for (const T& x : nodes.sorted()) sumsq = sumsq + x * x;
    T denom = scalar_from<T>(Rational(int_pow(BigInt(2), static_cast<unsigned long>(p)) *
                                          factorial(p),
                                      1));
    return power_nonneg(sumsq, p) / denom;
}

}  // namespace divcheck
