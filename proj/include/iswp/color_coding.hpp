#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "iswp/dp.hpp"
#include "iswp/errors.hpp"
#include "iswp/exact.hpp"
#include "iswp/graph.hpp"
#include "iswp/hash_family.hpp"
#include "iswp/labelled.hpp"
#include "iswp/minimal.hpp"
#include "iswp/property.hpp"
#include "iswp/rng.hpp"

namespace iswp {

// Decides whether the colourful count is nonzero for one concrete colouring.
using MulticolourDecider =
    std::function<bool(const PropertyFamily&, const Graph&, int, const Colouring&)>;

inline MulticolourDecider brute_force_multicolour_decider(const Limits& lim = {}) {
    return [lim](const PropertyFamily& phi, const Graph& g, int k, const Colouring& f) {
        return decide_exact_bruteforce(phi, g, k, f, lim).yes;
    };
}

// Monotone properties only: a colourful tuple satisfies the property exactly
// when it spans a colourful copy of some minimal satisfying pattern, so one
// decomposition-based count per minimal pattern settles the decision.
inline MulticolourDecider dp_multicolour_decider(const Limits& lim = {}) {
    return [lim](const PropertyFamily& phi, const Graph& g, int k, const Colouring& f) {
        if (!phi.monotone)
            throw input_error("the decomposition decider requires a monotone property");
        for (const LabelledGraph& minimal : enumerate_minimal_labelled(phi, k, lim)) {
            if (count_colourful_copies_dp(minimal, g, f, lim) > 0) return true;
        }
        return false;
    };
}

enum class ColourCodingMode { family, random };

struct ColourCodingResult {
    bool yes = false;
    std::uint64_t colourings_tried = 0;
};

namespace detail {

inline std::uint64_t colour_coding_repetitions(int k, const Rational& delta) {
    Count kk = 1;
    for (int i = 0; i < k; ++i) kk *= k;
    double ratio = static_cast<double>(Rational(kk, factorial(k)));
    double reps = ratio * std::log(1.0 / static_cast<double>(delta));
    auto r = static_cast<std::uint64_t>(std::ceil(reps));
    return r == 0 ? 1 : r;
}

} // namespace detail

// Reduces the uncoloured decision to multicolour decisions. Family mode is
// exact: some member rainbows the vertex set of any satisfying tuple.
// Random mode errs one-sidedly (NO may be wrong) with probability at most
// delta after ceil(k^k/k! * ln(1/delta)) independent uniform colourings.
inline ColourCodingResult decide_colour_coding(const PropertyFamily& phi, const Graph& g, int k,
                                               ColourCodingMode mode,
                                               const MulticolourDecider& decider,
                                               const Rational& delta = Rational(1, 2),
                                               std::uint64_t seed = 0, const Limits& lim = {}) {
    check_mask_order(k);
    if (k < 1) throw input_error("colour coding needs k >= 1");
    ColourCodingResult result;
    if (k > g.order()) return result;

    if (mode == ColourCodingMode::family) {
        HashFamily fam = build_k_perfect_family(g.order(), k, lim);
        for (const auto& fn : fam.functions) {
            Colouring f{k, fn};
            ++result.colourings_tried;
            if (decider(phi, g, k, f)) {
                result.yes = true;
                return result;
            }
        }
        return result;
    }

    if (delta <= 0 || delta >= 1) throw input_error("delta must lie in (0,1)");
    std::uint64_t reps = detail::colour_coding_repetitions(k, delta);
    check_budget(Count(reps), lim, "random colourings");
    SplitMix64 rng(mix_seed(seed, 0));
    for (std::uint64_t i = 0; i < reps; ++i) {
        Colouring f;
        f.k = k;
        f.colour.resize(g.order());
        for (int v = 0; v < g.order(); ++v)
            f.colour[v] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
        ++result.colourings_tried;
        if (decider(phi, g, k, f)) {
            result.yes = true;
            return result;
        }
    }
    return result;
}

} // namespace iswp
