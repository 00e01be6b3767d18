#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iswp/counting.hpp"
#include "iswp/errors.hpp"
#include "iswp/graph.hpp"
#include "iswp/labelled.hpp"
#include "iswp/minor_map.hpp"
#include "iswp/numbers.hpp"
#include "iswp/rng.hpp"

namespace iswp {

// One contiguous run of host vertices: either the residual pattern vertices
// (cell = -1) or a copy of the pattern's branch set for `cell`, tagged with
// the source vertex v and source edge {eu, ev} that the copy represents.
struct GadgetBlock {
    int cell = -1;
    int v = -1;
    int eu = -1;
    int ev = -1;
    int start = 0;
    int size = 0;
};

// The clique-counting host instance: a graph whose colourful induced copies
// of the pattern are in bijection with the k-cliques of the source graph.
struct GadgetInstance {
    Graph host;
    Colouring colouring;             // |V(pattern)| colours
    std::vector<GadgetBlock> blocks; // residual block first, then cells row-major
    std::vector<int> h_vertex;       // host vertex -> pattern vertex underneath
    std::vector<int> block_of;       // host vertex -> block index
    std::vector<int> residual;       // pattern vertices outside every image

    Graph source;
    int k = 0;
    Graph pattern;
    MinorMap minor_map;
    Colouring omega; // bijective colouring of the pattern

    int rows() const { return minor_map.k; }
    int cols() const { return minor_map.cols(); }
};

namespace detail {

// The copy-copy edge conditions, which depend only on block metadata:
// same row -> same source vertex; lower row -> strictly smaller source
// vertex; same column -> same source edge. Same-cell blocks differ in
// (v, e), so distinct ones are never compatible.
inline bool blocks_compatible(const GadgetBlock& a, const GadgetBlock& b, int cols) {
    if (a.cell == b.cell) return a.v == b.v && a.eu == b.eu && a.ev == b.ev;
    int row_a = a.cell / cols, row_b = b.cell / cols;
    if (row_a == row_b && a.v != b.v) return false;
    if (row_a < row_b && a.v >= b.v) return false;
    if (row_a > row_b && b.v >= a.v) return false;
    if (a.cell % cols == b.cell % cols && (a.eu != b.eu || a.ev != b.ev)) return false;
    return true;
}

} // namespace detail

// Builds the host graph: one copy of each branch set per admissible
// (source vertex, source edge) pair -- rows belonging to their column's pair
// admit only incident (v, e) -- plus the residual pattern vertices. Edges
// join pattern-adjacent underlying vertices, restricted between copies by
// the metadata conditions above. Colours are the pattern vertices via omega.
inline GadgetInstance build_clique_gadget(const Graph& g, int k, const Graph& h,
                                          const MinorMap& m, const Colouring& omega,
                                          const Limits& lim = {}) {
    if (k < 2) throw input_error("gadget construction needs k >= 2");
    if (m.k != k)
        throw input_error("minor map is for k=" + std::to_string(m.k) + ", requested k=" +
                          std::to_string(k));
    MinorMapReport mr = validate_minor_map(h, m);
    if (!mr.valid) {
        std::string what = "minor map fails validation:";
        for (const auto& violation : mr.violations)
            what += " [condition " + std::to_string(violation.condition) + "] " + violation.detail;
        throw input_error(what);
    }
    omega.validate(h.order());
    if (omega.k != h.order() || !omega.bijective())
        throw input_error("omega must be a bijection onto the pattern's vertex count");

    GadgetInstance gi;
    gi.source = g;
    gi.k = k;
    gi.pattern = h;
    gi.minor_map = m;
    gi.omega = omega;

    std::vector<int> owner(h.order(), -1);
    for (int cell = 0; cell < m.cells(); ++cell)
        for (int u : m.images[cell]) owner[u] = cell;
    for (int u = 0; u < h.order(); ++u)
        if (owner[u] < 0) gi.residual.push_back(u);

    gi.blocks.push_back({-1, -1, -1, -1, 0, static_cast<int>(gi.residual.size())});
    for (int u : gi.residual) {
        gi.h_vertex.push_back(u);
        gi.block_of.push_back(0);
    }

    const auto& edges = g.edges();
    auto pairs = pairs_of(k);
    for (int cell = 0; cell < m.cells(); ++cell) {
        int row = cell / m.cols() + 1;
        auto [j, l] = pairs[cell % m.cols()];
        bool incident_only = (row == j || row == l);
        for (int v = 0; v < g.order(); ++v) {
            for (const auto& [a, b] : edges) {
                if (incident_only && v != a && v != b) continue;
                int id = static_cast<int>(gi.blocks.size());
                gi.blocks.push_back({cell, v, a, b, static_cast<int>(gi.h_vertex.size()),
                                     static_cast<int>(m.images[cell].size())});
                for (int u : m.images[cell]) {
                    gi.h_vertex.push_back(u);
                    gi.block_of.push_back(id);
                }
            }
        }
    }

    int order = static_cast<int>(gi.h_vertex.size());
    check_budget(Count(order) * order, lim, "gadget edge construction");
    gi.host = Graph(order);
    for (int x = 0; x < order; ++x) {
        for (int y = x + 1; y < order; ++y) {
            if (!h.has_edge(gi.h_vertex[x], gi.h_vertex[y])) continue;
            const GadgetBlock& bx = gi.blocks[gi.block_of[x]];
            const GadgetBlock& by = gi.blocks[gi.block_of[y]];
            if (bx.cell >= 0 && by.cell >= 0 &&
                !detail::blocks_compatible(bx, by, m.cols()))
                continue;
            gi.host.add_edge(x, y);
        }
    }

    gi.colouring.k = h.order();
    gi.colouring.colour.resize(order);
    for (int x = 0; x < order; ++x) gi.colouring.colour[x] = omega.colour[gi.h_vertex[x]];
    return gi;
}

namespace detail {

// Depth-first search over one block choice per cell, in row-major cell
// order. Compatibility with every already-chosen block prunes; each full
// assignment is handed to the sink, which must run its own complete check.
// Returns the number of search states examined (candidate block tests).
inline std::uint64_t gadget_search(const GadgetInstance& gi, const Limits& lim,
                                   const std::function<void(const std::vector<int>&)>& sink) {
    int cells = gi.minor_map.cells();
    std::vector<std::vector<int>> candidates(cells);
    for (std::size_t bi = 1; bi < gi.blocks.size(); ++bi)
        candidates[gi.blocks[bi].cell].push_back(static_cast<int>(bi));

    std::uint64_t states = 0;
    std::vector<int> chosen;
    chosen.reserve(cells);
    std::function<void(int)> rec = [&](int cell) {
        if (cell == cells) {
            sink(chosen);
            return;
        }
        for (int bi : candidates[cell]) {
            if (++states > lim.node_budget)
                throw budget_error("gadget verification exceeded the node budget of " +
                                   std::to_string(lim.node_budget) + " search states");
            const GadgetBlock& cand = gi.blocks[bi];
            bool ok = true;
            for (int prev : chosen)
                if (!blocks_compatible(gi.blocks[prev], cand, gi.minor_map.cols())) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(bi);
            rec(cell + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return states;
}

// Complete induced check of a candidate colourful set against the pattern:
// host adjacency must equal pattern adjacency of the underlying vertices on
// every pair. This is the check that decides acceptance; the search above
// only narrows where to look.
inline bool induces_pattern_copy(const GadgetInstance& gi, const std::vector<int>& y) {
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i + 1; j < y.size(); ++j)
            if (gi.host.has_edge(y[i], y[j]) !=
                gi.pattern.has_edge(gi.h_vertex[y[i]], gi.h_vertex[y[j]]))
                return false;
    return true;
}

inline std::vector<int> assemble_candidate(const GadgetInstance& gi,
                                           const std::vector<int>& chosen_blocks) {
    std::vector<int> y;
    const GadgetBlock& res = gi.blocks[0];
    for (int x = res.start; x < res.start + res.size; ++x) y.push_back(x);
    for (int bi : chosen_blocks) {
        const GadgetBlock& blk = gi.blocks[bi];
        for (int x = blk.start; x < blk.start + blk.size; ++x) y.push_back(x);
    }
    std::sort(y.begin(), y.end());
    return y;
}

} // namespace detail

// All colourful vertex sets inducing a copy of the pattern, as sorted host
// vertex lists.
inline std::vector<std::vector<int>> enumerate_colourful_copies(const GadgetInstance& gi,
                                                                const Limits& lim = {}) {
    std::vector<std::vector<int>> copies;
    detail::gadget_search(gi, lim, [&](const std::vector<int>& chosen) {
        std::vector<int> y = detail::assemble_candidate(gi, chosen);
        if (detail::induces_pattern_copy(gi, y)) copies.push_back(std::move(y));
    });
    return copies;
}

struct GadgetVerification {
    Count lhs = 0; // colourful induced pattern copies in the host
    Count rhs = 0; // k-cliques of the source graph
    bool equal = false;
    std::uint64_t search_states = 0;
};

inline GadgetVerification verify_gadget_identity(const GadgetInstance& gi,
                                                 const Limits& lim = {}) {
    GadgetVerification report;
    report.search_states = detail::gadget_search(gi, lim, [&](const std::vector<int>& chosen) {
        if (detail::induces_pattern_copy(gi, detail::assemble_candidate(gi, chosen)))
            ++report.lhs;
    });
    for_each_subset(gi.source.order(), gi.k, [&](const std::vector<int>& subset) {
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = i + 1; j < subset.size(); ++j)
                if (!gi.source.has_edge(subset[i], subset[j])) return true;
        ++report.rhs;
        return true;
    }, lim);
    report.equal = report.lhs == report.rhs;
    return report;
}

// Reads the k source vertices back out of a verified colourful copy. Every
// consistency condition along the way is an internal invariant: a violation
// on a set that passed the induced check cannot be caused by the caller.
inline std::vector<int> decode_colourful_copy(const GadgetInstance& gi,
                                              const std::vector<int>& y_in) {
    const Graph& h = gi.pattern;
    std::vector<int> y = y_in;
    std::sort(y.begin(), y.end());
    if (static_cast<int>(y.size()) != h.order())
        throw input_error("a copy has exactly one vertex per colour (" +
                          std::to_string(h.order()) + " expected, got " +
                          std::to_string(y.size()) + ")");
    std::vector<bool> colour_seen(h.order() + 1, false);
    for (int x : y) {
        if (x < 0 || x >= gi.host.order()) throw input_error("copy vertex out of range");
        int c = gi.colouring.colour[x];
        if (colour_seen[c]) throw input_error("the chosen set is not colourful");
        colour_seen[c] = true;
    }
    if (!detail::induces_pattern_copy(gi, y))
        throw input_error("the chosen set does not induce a copy of the pattern");

    int cells = gi.minor_map.cells(), cols = gi.cols(), k = gi.k;
    std::vector<int> cell_block(cells, -1);
    for (int x : y) {
        int bi = gi.block_of[x];
        const GadgetBlock& blk = gi.blocks[bi];
        if (blk.cell < 0) continue;
        if (cell_block[blk.cell] >= 0 && cell_block[blk.cell] != bi)
            throw internal_error("copy mixes two source pairs inside one cell");
        cell_block[blk.cell] = bi;
    }
    for (int cell = 0; cell < cells; ++cell)
        if (cell_block[cell] < 0) throw internal_error("copy misses a cell entirely");

    std::vector<int> tau1(k + 1, -1);
    for (int cell = 0; cell < cells; ++cell) {
        const GadgetBlock& blk = gi.blocks[cell_block[cell]];
        int row = cell / cols + 1;
        if (tau1[row] < 0)
            tau1[row] = blk.v;
        else if (tau1[row] != blk.v)
            throw internal_error("copy assigns two source vertices to one row");
    }
    for (int i = 1; i < k; ++i)
        if (tau1[i] >= tau1[i + 1])
            throw internal_error("decoded row vertices are not strictly increasing");

    auto pairs = pairs_of(k);
    for (int col = 0; col < cols; ++col) {
        int eu = -1, ev = -1;
        for (int row = 1; row <= k; ++row) {
            const GadgetBlock& blk = gi.blocks[cell_block[gi.minor_map.cell_index(row, col)]];
            if (eu < 0) {
                eu = blk.eu;
                ev = blk.ev;
            } else if (eu != blk.eu || ev != blk.ev) {
                throw internal_error("copy assigns two source edges to one column");
            }
        }
        auto [j, l] = pairs[col];
        int a = std::min(tau1[j], tau1[l]), b = std::max(tau1[j], tau1[l]);
        if (eu != a || ev != b)
            throw internal_error("column edge does not join its two decoded row vertices");
    }
    std::vector<int> decoded(tau1.begin() + 1, tau1.end());
    for (std::size_t i = 0; i < decoded.size(); ++i)
        for (std::size_t j = i + 1; j < decoded.size(); ++j)
            if (!gi.source.has_edge(decoded[i], decoded[j]))
                throw internal_error("decoded vertex set is not a clique in the source graph");
    return decoded;
}

// Forward map: a k-clique of the source selects, in each cell, the block of
// its row's vertex and its column's edge; together with the residual
// vertices this is a colourful induced copy, and decoding returns the
// clique.
inline std::vector<int> encode_clique(const GadgetInstance& gi, std::vector<int> clique) {
    if (static_cast<int>(clique.size()) != gi.k)
        throw input_error("expected exactly k=" + std::to_string(gi.k) + " source vertices");
    std::sort(clique.begin(), clique.end());
    for (std::size_t i = 0; i < clique.size(); ++i) {
        if (clique[i] < 0 || clique[i] >= gi.source.order())
            throw input_error("clique vertex out of range");
        if (i > 0 && clique[i] == clique[i - 1]) throw input_error("repeated clique vertex");
    }
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!gi.source.has_edge(clique[i], clique[j]))
                throw input_error("the given vertices are not a clique in the source graph");

    auto pairs = pairs_of(gi.k);
    std::vector<int> y;
    const GadgetBlock& res = gi.blocks[0];
    for (int x = res.start; x < res.start + res.size; ++x) y.push_back(x);
    for (int cell = 0; cell < gi.minor_map.cells(); ++cell) {
        int row = cell / gi.cols() + 1;
        auto [j, l] = pairs[cell % gi.cols()];
        int v = clique[row - 1];
        int eu = std::min(clique[j - 1], clique[l - 1]);
        int ev = std::max(clique[j - 1], clique[l - 1]);
        int found = -1;
        for (std::size_t bi = 1; bi < gi.blocks.size(); ++bi) {
            const GadgetBlock& blk = gi.blocks[bi];
            if (blk.cell == cell && blk.v == v && blk.eu == eu && blk.ev == ev) {
                found = static_cast<int>(bi);
                break;
            }
        }
        if (found < 0) throw internal_error("encoding block missing for an admissible pair");
        const GadgetBlock& blk = gi.blocks[found];
        for (int x = blk.start; x < blk.start + blk.size; ++x) y.push_back(x);
    }
    std::sort(y.begin(), y.end());
    return y;
}

struct ClosureReport {
    std::uint64_t trials_requested = 0;
    std::uint64_t trials_run = 0;
    std::uint64_t violations = 0; // trials whose induced graph escapes the pattern
    std::string note;
};

// Property check behind the decoder's soundness: EVERY colourful set (one
// vertex per colour, uniformly sampled) induces a subgraph of the pattern
// under the colour map -- host edges never connect pattern-non-adjacent
// colours.
inline ClosureReport check_subgraph_closure(const GadgetInstance& gi, std::uint64_t trials,
                                            std::uint64_t seed) {
    if (trials < 1) throw input_error("need at least one trial");
    ClosureReport report;
    report.trials_requested = trials;
    std::vector<std::vector<int>> classes(gi.pattern.order() + 1);
    for (int x = 0; x < gi.host.order(); ++x)
        classes[gi.colouring.colour[x]].push_back(x);
    for (int c = 1; c <= gi.pattern.order(); ++c) {
        if (classes[c].empty()) {
            report.note = "colour " + std::to_string(c) +
                          " has no vertices; no colourful set exists";
            return report;
        }
    }
    SplitMix64 rng(mix_seed(seed, 0));
    std::vector<int> y(gi.pattern.order());
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        for (int c = 1; c <= gi.pattern.order(); ++c)
            y[c - 1] = classes[c][rng.below(classes[c].size())];
        ++report.trials_run;
        bool violated = false;
        for (std::size_t i = 0; i < y.size() && !violated; ++i)
            for (std::size_t j = i + 1; j < y.size(); ++j)
                if (gi.host.has_edge(y[i], y[j]) &&
                    !gi.pattern.has_edge(gi.h_vertex[y[i]], gi.h_vertex[y[j]])) {
                    violated = true;
                    break;
                }
        if (violated) ++report.violations;
    }
    return report;
}

// Adds a vertex adjacent to everything, carrying a fresh (k+1)-th colour:
// the augmented instance has a colourful (k+1)-clique-or-independent-set
// exactly when the original has a colourful k-clique.
inline std::pair<Graph, Colouring> add_universal_vertex(const Graph& g, const Colouring& f) {
    f.validate(g.order());
    Graph out(g.order() + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 0; v < g.order(); ++v) out.add_edge(v, g.order());
    Colouring extended;
    extended.k = f.k + 1;
    extended.colour = f.colour;
    extended.colour.push_back(f.k + 1);
    return {std::move(out), std::move(extended)};
}

} // namespace iswp
