#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iswp/counting.hpp"
#include "iswp/errors.hpp"
#include "iswp/labelled.hpp"
#include "iswp/numbers.hpp"
#include "iswp/rng.hpp"

namespace iswp {

// A family of colourings [n] -> [k] meant to hit every k-subset of vertices
// with all k colours at least once. validation_mode records how perfection
// was last checked: "exhaustive" (every subset) or "sampled" (spot checks).
struct HashFamily {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> functions; // each maps vertex -> colour 1..k
    std::string validation_mode = "unvalidated";
};

struct FamilyValidation {
    bool perfect = true;
    std::string mode;
    std::vector<int> uncovered; // witness subset when not perfect
};

namespace detail {

inline bool family_covers(const HashFamily& fam, const std::vector<int>& subset) {
    for (const auto& fn : fam.functions) {
        std::uint32_t seen = 0;
        for (int v : subset) seen |= std::uint32_t(1) << (fn[v] - 1);
        if (seen == (std::uint32_t(1) << fam.k) - 1) return true;
    }
    return false;
}

inline void check_family_args(int n, int k) {
    if (k < 1 || k > n) throw input_error("need 1 <= k <= n for a perfect hash family");
    if (k > 31) throw input_error("colour count above 31 is not supported");
}

} // namespace detail

// Exhaustive when the subset space is enumerable within budget, otherwise a
// seeded spot check (which can refute perfection but not certify it).
inline FamilyValidation validate_k_perfect_family(const HashFamily& fam, const Limits& lim = {},
                                                  std::uint64_t samples = 200000,
                                                  std::uint64_t seed = 0x5eedf00d) {
    detail::check_family_args(fam.n, fam.k);
    for (const auto& fn : fam.functions) {
        if (static_cast<int>(fn.size()) != fam.n)
            throw input_error("family member does not colour all n vertices");
        for (int c : fn)
            if (c < 1 || c > fam.k) throw input_error("family member uses a colour outside 1..k");
    }
    FamilyValidation result;
    Count space = binomial(fam.n, fam.k);
    Count work = space * Count(std::max<std::size_t>(fam.functions.size(), 1)) * fam.k;
    if (work <= lim.node_budget) {
        result.mode = "exhaustive";
        for_each_subset(fam.n, fam.k, [&](const std::vector<int>& subset) {
            if (!detail::family_covers(fam, subset)) {
                result.perfect = false;
                result.uncovered = subset;
                return false;
            }
            return true;
        }, lim);
    } else {
        result.mode = "sampled";
        SplitMix64 rng(seed);
        for (std::uint64_t trial = 0; trial < samples; ++trial) {
            std::vector<int> subset = random_tuple(rng, fam.n, fam.k);
            std::sort(subset.begin(), subset.end());
            if (!detail::family_covers(fam, subset)) {
                result.perfect = false;
                result.uncovered = subset;
                break;
            }
        }
    }
    return result;
}

// Greedy cover: repeatedly take the first uncovered subset, emit a colouring
// that rainbows it (everything else cycles through the colours), and mark
// everything that colouring newly covers.
inline HashFamily build_greedy_family(int n, int k, const Limits& lim = {}) {
    detail::check_family_args(n, k);
    check_budget(binomial(n, k) * Count(k), lim, "greedy cover enumeration");

    std::vector<std::vector<int>> subsets;
    for_each_subset(n, k, [&](const std::vector<int>& s) {
        subsets.push_back(s);
        return true;
    }, lim);

    HashFamily fam;
    fam.n = n;
    fam.k = k;
    std::vector<bool> covered(subsets.size(), false);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        if (covered[i]) continue;
        std::vector<int> fn(n);
        for (int v = 0; v < n; ++v) fn[v] = v % k + 1;
        for (int j = 0; j < k; ++j) fn[subsets[i][j]] = j + 1;
        for (std::size_t t = i; t < subsets.size(); ++t) {
            if (covered[t]) continue;
            std::uint32_t seen = 0;
            for (int v : subsets[t]) seen |= std::uint32_t(1) << (fn[v] - 1);
            if (seen == (std::uint32_t(1) << k) - 1) covered[t] = true;
        }
        fam.functions.push_back(std::move(fn));
    }
    return fam;
}

namespace detail {

inline int next_prime_above(int lower) {
    int candidate = std::max(lower + 1, 2);
    auto is_prime = [](int p) {
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    while (!is_prime(candidate)) ++candidate;
    return candidate;
}

} // namespace detail

// Two-stage construction for large vertex counts: modular maps x -> ((a*x)
// mod p) mod k^2 over every multiplier a (for any k-subset some a is
// injective into [k^2]), composed with a greedy inner (k^2, k) family.
inline HashFamily build_fks_family(int n, int k, const Limits& lim = {}) {
    detail::check_family_args(n, k);
    int square = k * k;
    if (n <= square) return build_greedy_family(n, k, lim);
    int p = detail::next_prime_above(std::max(n - 1, square));
    HashFamily inner = build_greedy_family(square, k, lim);
    check_budget(Count(p - 1) * Count(inner.functions.size()) * n, lim,
                 "composed family construction");

    HashFamily fam;
    fam.n = n;
    fam.k = k;
    for (int a = 1; a < p; ++a) {
        for (const auto& inner_fn : inner.functions) {
            std::vector<int> fn(n);
            for (int x = 0; x < n; ++x) {
                int cell = static_cast<int>((std::int64_t(a) * x) % p) % square;
                fn[x] = inner_fn[cell];
            }
            fam.functions.push_back(std::move(fn));
        }
    }
    return fam;
}

// Deterministic in (n, k); always validated before being returned, and a
// failed validation is a construction defect, not an input problem.
inline HashFamily build_k_perfect_family(int n, int k, const Limits& lim = {}) {
    detail::check_family_args(n, k);
    HashFamily fam =
        binomial(n, k) <= 100000 ? build_greedy_family(n, k, lim) : build_fks_family(n, k, lim);
    FamilyValidation validation = validate_k_perfect_family(fam, lim);
    if (!validation.perfect) {
        std::string subset;
        for (int v : validation.uncovered) subset += (subset.empty() ? "" : ",") + std::to_string(v);
        throw internal_error("constructed family misses subset {" + subset + "}");
    }
    fam.validation_mode = validation.mode;
    return fam;
}

} // namespace iswp
