#pragma once

#include <bit>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iswp/counting.hpp"
#include "iswp/errors.hpp"
#include "iswp/graph.hpp"
#include "iswp/labelled.hpp"
#include "iswp/numbers.hpp"
#include "iswp/property.hpp"

namespace iswp {

struct Decision {
    bool yes = false;
    std::vector<int> witness; // satisfying tuple when yes
    std::string note;         // anomaly flag, e.g. oracle inconsistency
};

namespace detail {

inline void check_colouring_arity(const Colouring& f, const Graph& g, int k) {
    f.validate(g.order());
    if (f.k != k)
        throw input_error("colouring uses " + std::to_string(f.k) + " colours but k=" +
                          std::to_string(k));
}

} // namespace detail

// Number of injective k-tuples whose induced labelled graph satisfies the
// property; with a colouring, only tuples seeing all k colours count.
inline Count count_exact_bruteforce(const PropertyFamily& phi, const Graph& g, int k,
                                    const std::optional<Colouring>& f = std::nullopt,
                                    const Limits& lim = {}) {
    check_mask_order(k);
    if (f) detail::check_colouring_arity(*f, g, k);
    Count total = 0;
    for_each_tuple(g.order(), k, [&](const std::vector<int>& tuple) {
        if ((!f || f->colourful(tuple)) && phi.holds(k, mask_from_tuple(g, tuple))) ++total;
        return true;
    }, lim);
    return total;
}

inline Decision decide_exact_bruteforce(const PropertyFamily& phi, const Graph& g, int k,
                                        const std::optional<Colouring>& f = std::nullopt,
                                        const Limits& lim = {}) {
    check_mask_order(k);
    if (f) detail::check_colouring_arity(*f, g, k);
    Decision result;
    for_each_tuple(g.order(), k, [&](const std::vector<int>& tuple) {
        if ((!f || f->colourful(tuple)) && phi.holds(k, mask_from_tuple(g, tuple))) {
            result.yes = true;
            result.witness = tuple;
            return false;
        }
        return true;
    }, lim);
    return result;
}

using UncolouredCounter = std::function<Count(const PropertyFamily&, const Graph&, int)>;

// Colourful count via inclusion-exclusion over colour subsets: any counter
// for the uncoloured problem lifts to the colourful one through
//   sum over S of (-1)^{k-|S|} * count(G restricted to colours in S).
inline Count count_colourful_by_inclusion_exclusion(const PropertyFamily& phi, const Graph& g,
                                                    int k, const Colouring& f,
                                                    const UncolouredCounter& counter = {},
                                                    const Limits& lim = {}) {
    check_mask_order(k);
    detail::check_colouring_arity(f, g, k);
    if (k < 0 || k > 62) throw input_error("colour-subset enumeration needs 0 <= k <= 62");
    UncolouredCounter count_uncoloured = counter;
    if (!count_uncoloured)
        count_uncoloured = [&lim](const PropertyFamily& p, const Graph& h, int arity) {
            return count_exact_bruteforce(p, h, arity, std::nullopt, lim);
        };
    check_budget(Count(1) << k, lim, "colour-subset enumeration");

    Count total = 0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << k); ++subset) {
        std::vector<int> verts;
        for (int v = 0; v < g.order(); ++v)
            if ((subset >> (f.colour[v] - 1)) & 1u) verts.push_back(v);
        Count part = count_uncoloured(phi, induced_subgraph(g, verts), k);
        int missing = k - std::popcount(subset);
        total += (missing % 2 == 0) ? part : -part;
    }
    if (total < 0) throw internal_error("inclusion-exclusion produced a negative count");
    return total;
}

} // namespace iswp
