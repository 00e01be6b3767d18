#pragma once

#include <algorithm>
#include <vector>

#include "iswp/errors.hpp"
#include "iswp/graph.hpp"
#include "iswp/labelled.hpp"
#include "iswp/numbers.hpp"

namespace iswp {

// Brute-force isomorphism machinery. Patterns are parameter-sized, so
// permutation backtracking with adjacency pruning is enough; guarded by
// Limits::iso_max_n (default 10, configurable).

namespace detail {

inline void check_iso_guard(int n, const Limits& lim) {
    if (n > lim.iso_max_n)
        throw budget_error("isomorphism/automorphism search on " + std::to_string(n) +
                           " vertices exceeds the guard of " + std::to_string(lim.iso_max_n));
}

// Extends a partial map a->b vertex by vertex; prune on any adjacency
// mismatch against already-mapped vertices. Calls sink() per complete map;
// sink returning true stops the search.
template <class Sink>
bool map_search(const Graph& a, const Graph& b, std::vector<int>& image,
                std::vector<bool>& used, int depth, Sink&& sink) {
    int n = a.order();
    if (depth == n) return sink(image);
    for (int w = 0; w < n; ++w) {
        if (used[w]) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev)
            ok = a.has_edge(prev, depth) == b.has_edge(image[prev], w);
        if (!ok) continue;
        image[depth] = w;
        used[w] = true;
        if (map_search(a, b, image, used, depth + 1, sink)) return true;
        used[w] = false;
    }
    return false;
}

} // namespace detail

inline bool are_isomorphic(const Graph& a, const Graph& b, const Limits& lim = {}) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    detail::check_iso_guard(a.order(), lim);
    auto degrees = [](const Graph& g) {
        std::vector<int> d(g.order());
        for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;
    std::vector<int> image(a.order());
    std::vector<bool> used(a.order(), false);
    return detail::map_search(a, b, image, used, 0, [](const std::vector<int>&) { return true; });
}

inline Count count_automorphisms(const Graph& h, const Limits& lim = {}) {
    detail::check_iso_guard(h.order(), lim);
    Count total = 0;
    std::vector<int> image(h.order());
    std::vector<bool> used(h.order(), false);
    detail::map_search(h, h, image, used, 0, [&](const std::vector<int>&) {
        ++total;
        return false;
    });
    return total;
}

// Minimum edge mask over all relabellings: a canonical form for isomorphism
// classes of labelled-graph masks (k small).
inline EdgeMask canonical_mask(int k, EdgeMask m, const Limits& lim = {}) {
    detail::check_iso_guard(k, lim);
    check_mask_order(k);
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    EdgeMask best = permute_mask(m, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, permute_mask(m, perm));
    return best;
}

inline EdgeMask canonical_mask(const Graph& g, const Limits& lim = {}) {
    return canonical_mask(g.order(), LabelledGraph(g).mask(), lim);
}

// Every distinct edge mask reachable by relabelling the pattern, sorted.
// These are exactly the labelled copies of the pattern on its own vertex set.
inline std::vector<EdgeMask> all_labelled_masks(const Graph& pattern, const Limits& lim = {}) {
    int k = pattern.order();
    detail::check_iso_guard(k, lim);
    check_mask_order(k);
    EdgeMask base = LabelledGraph(pattern).mask();
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::vector<EdgeMask> masks;
    do {
        masks.push_back(permute_mask(base, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

} // namespace iswp
