#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "iswp/errors.hpp"
#include "iswp/graph.hpp"
#include "iswp/iso.hpp"
#include "iswp/labelled.hpp"
#include "iswp/numbers.hpp"
#include "iswp/property.hpp"

namespace iswp {

struct MinimalSet {
    int k = 0;
    std::vector<LabelledGraph> labelled_minimal;
    std::vector<Graph> unlabelled_minimal;
};

namespace detail {

inline void check_minimal_guard(int k, const Limits& lim) {
    if (k < 0) throw input_error("negative arity");
    if (k > lim.minimal_max_k)
        throw budget_error("minimal-set enumeration at k=" + std::to_string(k) +
                           " exceeds the guard of " + std::to_string(lim.minimal_max_k));
    check_mask_order(k);
}

// Any proper submask of m that satisfies the predicate disqualifies m.
template <class Sat>
bool mask_is_minimal(EdgeMask m, Sat&& satisfies) {
    if (m == 0) return true;
    for (EdgeMask sub = (m - 1) & m;; sub = (sub - 1) & m) {
        if (satisfies(sub)) return false;
        if (sub == 0) break;
    }
    return true;
}

} // namespace detail

// Minimal satisfying labelled graphs under the spanning-subgraph order
// (same labels, edge subset). Output is ascending in edge bitmask, one
// labelled graph per distinct mask.
inline std::vector<LabelledGraph> enumerate_minimal_labelled(const PropertyFamily& phi, int k,
                                                             const Limits& lim = {}) {
    detail::check_minimal_guard(k, lim);
    EdgeMask limit = full_mask(k);
    std::vector<LabelledGraph> out;
    for (EdgeMask m = 0;; ++m) {
        if (phi.holds(k, m) &&
            detail::mask_is_minimal(m, [&](EdgeMask s) { return phi.holds(k, s); }))
            out.push_back(labelled_from_mask(k, m));
        if (m == limit) break;
    }
    return out;
}

// Satisfying isomorphism classes with no satisfying class occurring as a
// proper spanning subgraph. Spanning subgraphs of a class are exactly the
// classes of submasks of any one labelled copy, so scanning submasks of the
// canonical representative suffices.
inline std::vector<Graph> enumerate_minimal_unlabelled(const PropertyFamily& phi, int k,
                                                       const Limits& lim = {}) {
    detail::check_minimal_guard(k, lim);
    EdgeMask limit = full_mask(k);
    std::map<EdgeMask, bool> class_satisfies;
    for (EdgeMask m = 0;; ++m) {
        EdgeMask canon = canonical_mask(k, m, lim);
        auto [it, fresh] = class_satisfies.emplace(canon, false);
        if (phi.holds(k, m)) it->second = true;
        (void)fresh;
        if (m == limit) break;
    }
    std::vector<Graph> out;
    for (auto [canon, sat] : class_satisfies) {
        if (!sat) continue;
        bool minimal = detail::mask_is_minimal(canon, [&](EdgeMask s) {
            return class_satisfies.at(canonical_mask(k, s, lim));
        });
        if (minimal) out.push_back(graph_from_mask(k, canon));
    }
    return out;
}

inline MinimalSet compute_minimal_set(const PropertyFamily& phi, int k, const Limits& lim = {}) {
    MinimalSet ms;
    ms.k = k;
    ms.labelled_minimal = enumerate_minimal_labelled(phi, k, lim);
    ms.unlabelled_minimal = enumerate_minimal_unlabelled(phi, k, lim);
    return ms;
}

struct UniformityReport {
    bool monotone = false;
    bool uniform = false;
    std::string witness; // empty when both hold
};

// monotone: adding any edge preserves satisfaction over all labelled graphs;
// uniform: the underlying graph of every minimal labelled element is a
// minimal unlabelled element.
inline UniformityReport check_uniformly_monotone(const PropertyFamily& phi, int k,
                                                 const Limits& lim = {}) {
    if (k < 0) throw input_error("negative arity");
    if (k > lim.monotone_max_k)
        throw budget_error("monotonicity check at k=" + std::to_string(k) +
                           " exceeds the guard of " + std::to_string(lim.monotone_max_k));
    check_mask_order(k);
    UniformityReport report;
    report.monotone = true;
    EdgeMask limit = full_mask(k);
    for (EdgeMask m = 0; report.monotone; ++m) {
        if (phi.holds(k, m)) {
            for (int b = 0; b < pair_count(k); ++b) {
                EdgeMask super = m | (EdgeMask(1) << b);
                if (super != m && !phi.holds(k, super)) {
                    report.monotone = false;
                    report.witness = "mask 0x" + mask_to_hex(m) + " satisfies but supermask 0x" +
                                     mask_to_hex(super) + " does not";
                    break;
                }
            }
        }
        if (m == limit) break;
    }

    std::vector<Graph> unlabelled = enumerate_minimal_unlabelled(phi, k, lim);
    std::set<EdgeMask> minimal_classes;
    for (const Graph& g : unlabelled) minimal_classes.insert(canonical_mask(g, lim));
    report.uniform = true;
    for (const LabelledGraph& hg : enumerate_minimal_labelled(phi, k, lim)) {
        if (!minimal_classes.count(canonical_mask(k, hg.mask(), lim))) {
            report.uniform = false;
            if (!report.witness.empty()) report.witness += "; ";
            report.witness += "minimal labelled mask 0x" + mask_to_hex(hg.mask()) +
                              " is not minimal as an unlabelled graph";
            break;
        }
    }
    return report;
}

// Number of label permutations carrying the chosen member onto some family
// member with an isomorphic underlying graph. Constant across the choice of
// member within one isomorphism class, which is what makes the
// embedding/occurrence conversion below a clean multiple.
inline Count alpha_coefficient(const std::vector<LabelledGraph>& family,
                               const LabelledGraph& member, const Limits& lim = {}) {
    if (family.empty()) throw input_error("alpha coefficient of an empty family");
    int k = member.graph.order();
    check_mask_order(k);
    detail::check_iso_guard(k, lim);
    for (const auto& hg : family)
        if (hg.graph.order() != k)
            throw input_error("family members must all have the member's order");

    bool found = false;
    for (const auto& hg : family)
        if (hg.mask() == member.mask()) found = true;
    if (!found) throw input_error("chosen labelled graph is not a family member");

    EdgeMask member_canon = canonical_mask(k, member.mask(), lim);
    std::set<EdgeMask> slice_masks;
    for (const auto& hg : family)
        if (canonical_mask(k, hg.mask(), lim) == member_canon) slice_masks.insert(hg.mask());

    Count alpha = 0;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (slice_masks.count(permute_mask(member.mask(), perm))) ++alpha;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return alpha;
}

} // namespace iswp
