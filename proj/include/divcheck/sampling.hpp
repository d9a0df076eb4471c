#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "divcheck/rational.hpp"

namespace divcheck {

/// mt19937_64 raw output is pinned by the standard; the distributions here
/// are hand-rolled so streams are identical across platforms and library
/// versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// uniform in [0, 1) with 53 random bits
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// unbiased integer in [0, bound) by rejection
    uint64_t below(uint64_t bound) {
        if (bound == 0) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    long range_int(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// standard Exp(1) by inverse CDF, -log(1-U)
    double exponential() { return -std::log1p(-unit()); }

private:
    std::mt19937_64 eng_;
};

/// splitmix64 step, for deriving independent per-chunk / per-property seeds
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// n distinct rationals k/denom with k/denom in [lo, hi]; numerators are kept
/// at least two lattice steps apart so float-mode conditioning stays sane.
inline std::vector<Rational> sample_rational_nodes(Rng& rng, int n, const Rational& lo,
                                                   const Rational& hi, long denom = 120) {
    long klo = to_long(Rational(numerator(lo * denom), denominator(lo * denom) == 1
                                                           ? BigInt(1)
                                                           : BigInt(1)));  // lo*denom integral by choice
    long khi = to_long(hi * denom);
    klo = to_long(lo * denom);
    std::vector<long> nums;
    while (static_cast<int>(nums.size()) < n) {
        long k = rng.range_int(klo, khi);
        bool ok = true;
        for (long other : nums) {
            if (std::abs(other - k) < 2) { ok = false; break; }
        }
        if (ok) nums.push_back(k);
    }
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n));
    for (long k : nums) out.emplace_back(k, denom);
    return out;
}

/// n distinct doubles in [lo, hi] with pairwise gaps >= min_gap
inline std::vector<double> sample_double_nodes(Rng& rng, int n, double lo, double hi,
                                               double min_gap) {
    std::vector<double> out;
    while (static_cast<int>(out.size()) < n) {
        double v = rng.uniform(lo, hi);
        bool ok = true;
        for (double other : out) {
            if (std::abs(other - v) < min_gap) { ok = false; break; }
        }
        if (ok) out.push_back(v);
    }
    return out;
}

/// A pair x, y of distinct-entry vectors with x majorized by y, produced by
/// Robin Hood transfers: move delta < (y_i - y_j)/2 from a larger coordinate
/// to a smaller one. delta is chosen on the same lattice so all coordinates
/// stay pairwise distinct.
struct MajorizationSample {
    std::vector<Rational> x;
    std::vector<Rational> y;
};

inline MajorizationSample sample_robin_hood_pair(Rng& rng, int n, const Rational& lo,
                                                 const Rational& hi, long denom = 120,
                                                 int transfers = 1) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Rational> y = sample_rational_nodes(rng, n, lo, hi, denom);
        std::sort(y.begin(), y.end(), std::greater<>());
        std::vector<Rational> x = y;
        bool ok = true;
        for (int t = 0; t < transfers && ok; ++t) {
            std::vector<Rational> sorted = x;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            int i = static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
            int j = i + 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n - i - 1)));
            Rational gap = sorted[static_cast<size_t>(i)] - sorted[static_cast<size_t>(j)];
            // delta = gap * k / 64 with k in [1, 31] keeps delta < gap/2
            Rational delta = gap * Rational(rng.range_int(1, 31), 64);
            std::vector<Rational> candidate = sorted;
            candidate[static_cast<size_t>(i)] -= delta;
            candidate[static_cast<size_t>(j)] += delta;
            std::sort(candidate.begin(), candidate.end(), std::greater<>());
            ok = std::adjacent_find(candidate.begin(), candidate.end()) == candidate.end();
            if (ok) x = candidate;
        }
        if (ok) return {std::move(x), std::move(y)};
    }
    throw Error("robin hood sampler failed to produce distinct coordinates");
}

}  // namespace divcheck
