#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "iswp/errors.hpp"
#include "iswp/graph.hpp"
#include "iswp/iso.hpp"
#include "iswp/labelled.hpp"
#include "iswp/numbers.hpp"

namespace iswp {

namespace detail {

inline std::uint64_t falling_product_u64(int n, int k, const Limits& lim, const char* what) {
    Count c = falling_factorial(n, k);
    check_budget(c, lim, what);
    return static_cast<std::uint64_t>(c);
}

} // namespace detail

// Visits every injective k-tuple over {0..n-1} in lexicographic order.
// The visitor may return false to stop early.
inline void for_each_tuple(int n, int k,
                           const std::function<bool(const std::vector<int>&)>& visit,
                           const Limits& lim = {}) {
    if (k < 0) throw input_error("negative tuple length");
    if (k > n) return;
    detail::falling_product_u64(n, k, lim, "injective tuple enumeration");
    std::vector<int> tuple(k);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int depth) {
        if (depth == k) return visit(tuple);
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            tuple[depth] = v;
            bool go = rec(depth + 1);
            used[v] = false;
            if (!go) return false;
        }
        return true;
    };
    rec(0);
}

// Visits every k-subset of {0..n-1} as a sorted vector, lexicographically.
inline void for_each_subset(int n, int k,
                            const std::function<bool(const std::vector<int>&)>& visit,
                            const Limits& lim = {}) {
    if (k < 0) throw input_error("negative subset size");
    if (k > n) return;
    check_budget(binomial(n, k), lim, "subset enumeration");
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    if (k == 0) {
        visit(subset);
        return;
    }
    while (true) {
        if (!visit(subset)) return;
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) return;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

// Strong embeddings of a labelled pattern: label-order maps whose image
// induces exactly the pattern's edge mask.
inline Count count_strong_embeddings(const LabelledGraph& pattern, const Graph& g,
                                     const Limits& lim = {}) {
    int k = pattern.graph.order();
    check_mask_order(k);
    EdgeMask target = pattern.mask();
    Count total = 0;
    for_each_tuple(g.order(), k, [&](const std::vector<int>& tuple) {
        if (mask_from_tuple(g, tuple) == target) ++total;
        return true;
    }, lim);
    return total;
}

// Strong embeddings of an unlabelled pattern: tuples whose induced mask is
// a (labelled) copy of H under some labelling, i.e. matches any permuted mask.
inline Count count_strong_embeddings(const Graph& pattern, const Graph& g,
                                     const Limits& lim = {}) {
    int k = pattern.order();
    check_mask_order(k);
    std::vector<EdgeMask> masks = all_labelled_masks(pattern, lim);
    Count total = 0;
    for_each_tuple(g.order(), k, [&](const std::vector<int>& tuple) {
        if (std::binary_search(masks.begin(), masks.end(), mask_from_tuple(g, tuple))) ++total;
        return true;
    }, lim);
    return total;
}

// Vertex subsets inducing a copy of the pattern (no automorphism quotient
// needed: a set either induces an isomorphic graph or it does not).
inline Count count_induced_occurrences(const Graph& pattern, const Graph& g,
                                       const Limits& lim = {}) {
    int k = pattern.order();
    Count total = 0;
    for_each_subset(g.order(), k, [&](const std::vector<int>& subset) {
        if (are_isomorphic(induced_subgraph(g, subset), pattern, lim)) ++total;
        return true;
    }, lim);
    return total;
}

inline Count count_colourful_strong_embeddings(const LabelledGraph& pattern, const Graph& g,
                                               const Colouring& colouring,
                                               const Limits& lim = {}) {
    int k = pattern.graph.order();
    check_mask_order(k);
    colouring.validate(g.order());
    if (colouring.k != k)
        throw input_error("colouring uses " + std::to_string(colouring.k) +
                          " colours, pattern has " + std::to_string(k) + " vertices");
    EdgeMask target = pattern.mask();
    Count total = 0;
    for_each_tuple(g.order(), k, [&](const std::vector<int>& tuple) {
        if (colouring.colourful(tuple) && mask_from_tuple(g, tuple) == target) ++total;
        return true;
    }, lim);
    return total;
}

// Colourful induced occurrences: subsets that see all k colours and induce
// a copy of the pattern.
inline Count count_colourful_induced(const Graph& pattern, const Graph& g,
                                     const Colouring& colouring, const Limits& lim = {}) {
    int k = pattern.order();
    colouring.validate(g.order());
    if (colouring.k != k)
        throw input_error("colouring uses " + std::to_string(colouring.k) +
                          " colours, pattern has " + std::to_string(k) + " vertices");
    Count total = 0;
    for_each_subset(g.order(), k, [&](const std::vector<int>& subset) {
        if (colouring.colourful(subset) &&
            are_isomorphic(induced_subgraph(g, subset), pattern, lim))
            ++total;
        return true;
    }, lim);
    return total;
}

} // namespace iswp
