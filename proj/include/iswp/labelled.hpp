#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "iswp/errors.hpp"
#include "iswp/graph.hpp"

namespace iswp {

// A labelled k-vertex graph is, for every purpose in the model, its edge
// bitmask over label pairs: bit pair_bit(a,b) records whether labels a+1 and
// b+1 (1-based in the model, 0-based here) are adjacent. Two pairs (H,pi)
// with equal masks are the same labelled graph. Colex pair order keeps the
// bit index independent of k; 64 bits cover k <= 11.
using EdgeMask = std::uint64_t;

constexpr int kMaxMaskOrder = 11;

inline int pair_count(int k) { return k * (k - 1) / 2; }

inline int pair_bit(int a, int b) {
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;
}

inline void check_mask_order(int k) {
    if (k < 0 || k > kMaxMaskOrder)
        throw input_error("labelled-graph order " + std::to_string(k) +
                          " outside supported range [0," + std::to_string(kMaxMaskOrder) + "]");
}

inline bool mask_has(EdgeMask m, int a, int b) { return (m >> pair_bit(a, b)) & 1u; }

inline std::string mask_to_hex(EdgeMask m) {
    std::ostringstream out;
    out << std::hex << m;
    return out.str();
}

inline EdgeMask full_mask(int k) {
    check_mask_order(k);
    return pair_count(k) == 64 ? ~EdgeMask(0) : (EdgeMask(1) << pair_count(k)) - 1;
}

// The mask of the tuple-induced labelled graph G[v_0..v_{k-1}].
inline EdgeMask mask_from_tuple(const Graph& g, const std::vector<int>& tuple) {
    check_mask_order(static_cast<int>(tuple.size()));
    EdgeMask m = 0;
    for (std::size_t b = 1; b < tuple.size(); ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (g.has_edge(tuple[a], tuple[b]))
                m |= EdgeMask(1) << pair_bit(static_cast<int>(a), static_cast<int>(b));
    return m;
}

// Relabelling: bit (a,b) of the result is bit (perm[a],perm[b]) of m.
inline EdgeMask permute_mask(EdgeMask m, const std::vector<int>& perm) {
    EdgeMask out = 0;
    int k = static_cast<int>(perm.size());
    for (int b = 1; b < k; ++b)
        for (int a = 0; a < b; ++a)
            if (mask_has(m, perm[a], perm[b]))
                out |= EdgeMask(1) << pair_bit(a, b);
    return out;
}

inline Graph graph_from_mask(int k, EdgeMask m) {
    check_mask_order(k);
    if (m & ~full_mask(k))
        throw input_error("mask uses bits beyond the " + std::to_string(pair_count(k)) +
                          " vertex pairs of order " + std::to_string(k));
    Graph g(k);
    for (int b = 1; b < k; ++b)
        for (int a = 0; a < b; ++a)
            if (mask_has(m, a, b)) g.add_edge(a, b);
    return g;
}

// (H, pi): a k-vertex graph with a bijective labelling pi: [k] -> V(H).
// labelling[i] is the vertex carrying label i+1.
struct LabelledGraph {
    Graph graph;
    std::vector<int> labelling;

    LabelledGraph() = default;
    explicit LabelledGraph(Graph g) : graph(std::move(g)) {
        labelling.resize(graph.order());
        std::iota(labelling.begin(), labelling.end(), 0);
    }
    LabelledGraph(Graph g, std::vector<int> pi) : graph(std::move(g)), labelling(std::move(pi)) {
        validate();
    }

    int order() const { return graph.order(); }

    void validate() const {
        if (static_cast<int>(labelling.size()) != graph.order())
            throw input_error("labelling size differs from graph order");
        std::vector<bool> seen(labelling.size(), false);
        for (int v : labelling) {
            if (v < 0 || v >= graph.order() || seen[v])
                throw input_error("labelling is not a bijection");
            seen[v] = true;
        }
    }

    EdgeMask mask() const {
        check_mask_order(order());
        EdgeMask m = 0;
        for (int b = 1; b < order(); ++b)
            for (int a = 0; a < b; ++a)
                if (graph.has_edge(labelling[a], labelling[b]))
                    m |= EdgeMask(1) << pair_bit(a, b);
        return m;
    }

    // Labelled-graph equality: same order and same induced mask.
    friend bool operator==(const LabelledGraph& x, const LabelledGraph& y) {
        return x.order() == y.order() && x.mask() == y.mask();
    }
};

inline LabelledGraph labelled_from_mask(int k, EdgeMask m) {
    return LabelledGraph(graph_from_mask(k, m));
}

// Vertex colouring f: V -> [k], stored 1-based to match the file format.
// Colours need not be surjective.
struct Colouring {
    int k = 0;
    std::vector<int> colour;

    Colouring() = default;
    Colouring(int k_, std::vector<int> assignment) : k(k_), colour(std::move(assignment)) {
        validate();
    }

    int order() const { return static_cast<int>(colour.size()); }

    void validate() const {
        if (k < 0) throw input_error("negative colour count");
        for (int c : colour)
            if (c < 1 || c > k) throw input_error("colour out of range [1," + std::to_string(k) + "]");
    }

    // Additionally requires the colouring to cover exactly n vertices.
    void validate(int n) const {
        if (order() != n)
            throw input_error("colouring covers " + std::to_string(order()) +
                              " vertices, the graph has " + std::to_string(n));
        validate();
    }

    bool bijective() const {
        if (k != order()) return false;
        std::vector<bool> used(k, false);
        for (int c : colour) {
            if (used[c - 1]) return false;
            used[c - 1] = true;
        }
        return true;
    }

    // True iff the tuple's colours are exactly {1..k}, one vertex each.
    bool colourful(const std::vector<int>& verts) const {
        if (static_cast<int>(verts.size()) != k) return false;
        std::uint64_t seen = 0;
        for (int v : verts) {
            std::uint64_t bit = std::uint64_t(1) << (colour[v] - 1);
            if (seen & bit) return false;
            seen |= bit;
        }
        return true;
    }

    Colouring restricted_to(const std::vector<int>& verts) const {
        Colouring out;
        out.k = k;
        out.colour.reserve(verts.size());
        for (int v : verts) out.colour.push_back(colour[v]);
        return out;
    }

    friend bool operator==(const Colouring& a, const Colouring& b) {
        return a.k == b.k && a.colour == b.colour;
    }
};

inline Colouring rainbow_colouring(int n) {
    Colouring f;
    f.k = n;
    f.colour.resize(n);
    std::iota(f.colour.begin(), f.colour.end(), 1);
    return f;
}

// --- Colouring file format ---------------------------------------------------
//
//   k <k>
//   c <vertex> <colour>    (exactly one line per vertex, colour in 1..k)

inline Colouring parse_colouring(const std::string& text, int n) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw input_error("empty colouring file");

    auto [header_no, header] = lines.front();
    std::istringstream hs(header);
    std::string tag;
    long long k = -1;
    if (!(hs >> tag >> k) || tag != "k" || k < 0 || (hs >> tag))
        throw detail::line_error(header_no, "malformed header, expected 'k <k>'");

    std::vector<int> colour(n, 0);
    std::vector<bool> assigned(n, false);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [no, line] = lines[i];
        std::istringstream cs(line);
        long long v = -1, c = -1;
        if (!(cs >> tag >> v >> c) || tag != "c" || (cs >> tag))
            throw detail::line_error(no, "malformed line, expected 'c <vertex> <colour>'");
        if (v < 0 || v >= n) throw detail::line_error(no, "vertex id out of range");
        if (c < 1 || c > k) throw detail::line_error(no, "colour out of range [1," + std::to_string(k) + "]");
        if (assigned[v]) throw detail::line_error(no, "vertex coloured twice");
        assigned[v] = true;
        colour[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    for (int v = 0; v < n; ++v)
        if (!assigned[v]) throw input_error("vertex " + std::to_string(v) + " has no colour line");
    return Colouring(static_cast<int>(k), std::move(colour));
}

inline std::string serialize_colouring(const Colouring& f) {
    std::ostringstream out;
    out << "k " << f.k << "\n";
    for (int v = 0; v < f.order(); ++v) out << "c " << v << " " << f.colour[v] << "\n";
    return out.str();
}

} // namespace iswp
