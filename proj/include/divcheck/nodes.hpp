#pragma once

#include <algorithm>
#include <vector>

#include "divcheck/domain.hpp"
#include "divcheck/errors.hpp"
#include "divcheck/policy.hpp"
#include "divcheck/rational.hpp"

namespace divcheck {

/// Validated list of pairwise-distinct evaluation points. Stores both the
/// original order and an ascending-sorted copy; the algorithms consume the
/// sorted order so results are deterministic under permutation.
template <class T>
class NodeSet {
public:
    static NodeSet create(std::vector<T> values, Domain domain, const ScalarPolicy& policy = {}) {
        if (values.size() < 2) throw TooFewNodesError("need at least 2 nodes");
        for (const T& v : values) {
            if (!domain.contains(v)) {
                throw OutOfDomainError("node outside domain " + domain.describe());
            }
        }
        std::vector<T> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        check_distinct(sorted, policy);
        NodeSet ns;
        ns.original_ = std::move(values);
        ns.sorted_ = std::move(sorted);
        ns.domain_ = std::move(domain);
        return ns;
    }

    int size() const { return static_cast<int>(sorted_.size()); }
    const std::vector<T>& sorted() const { return sorted_; }
    const std::vector<T>& original() const { return original_; }
    const T& min() const { return sorted_.front(); }
    const T& max() const { return sorted_.back(); }
    T span() const { return sorted_.back() - sorted_.front(); }
    const Domain& domain() const { return domain_; }

private:
    NodeSet() = default;

    static void check_distinct(const std::vector<T>& sorted, const ScalarPolicy& policy) {
        if constexpr (std::is_same_v<T, double>) {
            double span = sorted.back() - sorted.front();
            double threshold = policy.distinctness_threshold * span;
            for (size_t i = 1; i < sorted.size(); ++i) {
                if (sorted[i] - sorted[i - 1] <= threshold) {
                    throw DuplicateNodesError("nodes closer than distinctness threshold");
                }
            }
        } else {
            for (size_t i = 1; i < sorted.size(); ++i) {
                if (sorted[i] == sorted[i - 1]) {
                    throw DuplicateNodesError("duplicate node value " + to_string(sorted[i]));
                }
            }
        }
    }

    std::vector<T> original_;
    std::vector<T> sorted_;
    Domain domain_;
};

template <class T>
NodeSet<T> make_node_set(std::vector<T> values, Domain domain, const ScalarPolicy& policy = {}) {
    return NodeSet<T>::create(std::move(values), std::move(domain), policy);
}

inline NodeSet<double> to_double_nodes(const NodeSet<Rational>& nodes, const ScalarPolicy& policy = {.mode = ScalarMode::Float}) {
    std::vector<double> vals;
    vals.reserve(nodes.original().size());
    for (const Rational& v : nodes.original()) vals.push_back(to_double(v));
    return make_node_set<double>(std::move(vals), nodes.domain(), policy);
}

}  // namespace divcheck
