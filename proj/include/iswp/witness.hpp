#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "iswp/errors.hpp"
#include "iswp/exact.hpp"
#include "iswp/graph.hpp"
#include "iswp/labelled.hpp"
#include "iswp/property.hpp"
#include "iswp/sampling.hpp"

namespace iswp {

// Answers "is the (multicolour) count on this graph nonzero?"; graphs passed
// in are reindexed induced subgraphs of the original instance.
using NonzeroOracle = std::function<bool(const PropertyFamily&, const Graph&, int,
                                         const std::optional<Colouring>&)>;

inline NonzeroOracle exact_nonzero_oracle(const Limits& lim = {}) {
    return [lim](const PropertyFamily& phi, const Graph& g, int k,
                 const std::optional<Colouring>& f) {
        return decide_exact_bruteforce(phi, g, k, f, lim).yes;
    };
}

// Approximate-counter oracle with per-call fresh streams, accuracy 1/2 and
// confidence 1/(2n+1) against the original instance order n, so a union
// bound over the at most n+1 calls of one search leaves total error < 1/2.
inline NonzeroOracle sampling_nonzero_oracle(const Rational& g_k, const Rational& q_n,
                                             int original_n, std::uint64_t seed, int threads = 1,
                                             const Limits& lim = {}) {
    if (original_n < 1) throw input_error("oracle needs the original instance order (>= 1)");
    auto calls = std::make_shared<std::uint64_t>(0);
    Rational delta(1, 2 * original_n + 1);
    return [=](const PropertyFamily& phi, const Graph& g, int k,
               const std::optional<Colouring>& f) {
        std::uint64_t call = (*calls)++;
        SampleEstimate est = approximate_count_sampling(
            phi, g, k, Rational(1, 2), delta, g_k, q_n, mix_seed(seed, call), f, threads, lim);
        return est.hits > 0;
    };
}

// Vertex-deletion self-reduction: drop any vertex whose removal keeps the
// oracle nonzero, mark the rest necessary. A truthful oracle strands exactly
// k vertices on YES instances; the final tuple check against the property
// itself makes every YES verified regardless of oracle errors, so only NO
// can be wrong (when the oracle errs).
inline Decision decide_via_witness_search(const NonzeroOracle& oracle, const PropertyFamily& phi,
                                          const Graph& g, int k,
                                          const std::optional<Colouring>& f = std::nullopt,
                                          const Limits& lim = {}) {
    check_mask_order(k);
    if (f) detail::check_colouring_arity(*f, g, k);
    check_budget(factorial(k), lim, "witness verification permutations");
    Decision no;
    if (k > g.order()) return no;

    std::vector<int> alive(g.order());
    for (int v = 0; v < g.order(); ++v) alive[v] = v;
    auto ask = [&](const std::vector<int>& verts) {
        std::optional<Colouring> sub_f;
        if (f) sub_f = f->restricted_to(verts);
        return oracle(phi, induced_subgraph(g, verts), k, sub_f);
    };

    if (!ask(alive)) return no;
    int necessary = 0;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> without;
        without.reserve(alive.size() - 1);
        for (int u : alive)
            if (u != v) without.push_back(u);
        if (ask(without)) {
            alive = std::move(without);
        } else if (++necessary == k + 1) {
            no.note = "k+1 vertices marked necessary; oracle answers were inconsistent";
            return no;
        }
    }
    if (static_cast<int>(alive.size()) != k) {
        no.note = "search stranded " + std::to_string(alive.size()) +
                  " vertices instead of k; oracle answers were inconsistent";
        return no;
    }

    std::vector<int> tuple = alive; // already sorted ascending
    do {
        if ((!f || f->colourful(tuple)) && phi.holds(k, mask_from_tuple(g, tuple))) {
            Decision yes;
            yes.yes = true;
            yes.witness = tuple;
            return yes;
        }
    } while (std::next_permutation(tuple.begin(), tuple.end()));
    no.note = "surviving k-set carries no satisfying tuple";
    return no;
}

} // namespace iswp
