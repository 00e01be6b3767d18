#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "iswp/errors.hpp"
#include "iswp/graph.hpp"
#include "iswp/labelled.hpp"

namespace iswp {

// A property family evaluates one predicate per arity k on labelled k-vertex
// graphs; since a labelled graph is determined by its edge mask, predicates
// take (k, mask). The three flags are claims about the family, checkable at
// small k via check_uniformly_monotone / exhaustive permutation tests:
//   symmetric          value invariant under relabelling
//   monotone           closed under adding edges on the same label set
//   uniformly_monotone every minimal labelled element is minimal unlabelled
struct PropertyFamily {
    std::string name;
    bool symmetric = false;
    bool monotone = false;
    bool uniformly_monotone = false;
    std::function<bool(int, EdgeMask)> predicate;

    bool holds(int k, EdgeMask mask) const {
        check_mask_order(k);
        return predicate(k, mask);
    }
};

inline int evaluate_property(const PropertyFamily& phi, int k, const LabelledGraph& hg) {
    if (hg.graph.order() != k)
        throw input_error("property evaluated at k=" + std::to_string(k) + " on a " +
                          std::to_string(hg.graph.order()) + "-vertex labelled graph");
    return phi.holds(k, hg.mask()) ? 1 : 0;
}

namespace detail {

inline int mask_degree(int k, EdgeMask m, int v) {
    int d = 0;
    for (int u = 0; u < k; ++u)
        if (u != v && mask_has(m, u, v)) ++d;
    return d;
}

inline bool mask_connected(int k, EdgeMask m) { return is_connected(graph_from_mask(k, m)); }

// Union-find cycle detection straight on the mask.
inline bool mask_has_cycle(int k, EdgeMask m) {
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int b = 0; b < k; ++b)
        for (int a = 0; a < b; ++a) {
            if (!mask_has(m, a, b)) continue;
            int ra = find(a), rb = find(b);
            if (ra == rb) return true;
            parent[ra] = rb;
        }
    return false;
}

inline EdgeMask path_mask(int k) {
    EdgeMask m = 0;
    for (int i = 0; i + 1 < k; ++i) m |= EdgeMask(1) << pair_bit(i, i + 1);
    return m;
}

inline EdgeMask cycle_mask(int k) {
    EdgeMask m = path_mask(k);
    if (k >= 3) m |= EdgeMask(1) << pair_bit(k - 1, 0);
    return m;
}

inline EdgeMask matching_mask(int k) {
    EdgeMask m = 0;
    for (int i = 0; i + 1 < k; i += 2) m |= EdgeMask(1) << pair_bit(i, i + 1);
    return m;
}

} // namespace detail

// The built-in families. Fixed-pattern subgraph encodings (matching,
// sub_path, sub_cycle) require a specific labelled pattern to be present:
// the pairing (1,2)(3,4)..., the path 1-2-...-k, the cycle 1-2-...-k-1.
// Induced variants ask the whole labelled graph to be a path/cycle.
// treewidth_ge_2 holds exactly when the graph contains a cycle.
inline std::vector<PropertyFamily> builtin_properties() {
    std::vector<PropertyFamily> props;
    props.push_back({"clique", true, true, true,
                     [](int k, EdgeMask m) { return m == full_mask(k); }});
    props.push_back({"independent_set", true, false, true,
                     [](int, EdgeMask m) { return m == 0; }});
    props.push_back({"clique_or_is", true, false, true,
                     [](int k, EdgeMask m) { return m == 0 || m == full_mask(k); }});
    props.push_back({"connected", true, true, true,
                     [](int k, EdgeMask m) { return detail::mask_connected(k, m); }});
    props.push_back({"matching", false, true, true, [](int k, EdgeMask m) {
                         if (k % 2 != 0) return false;
                         EdgeMask need = detail::matching_mask(k);
                         return (m & need) == need;
                     }});
    props.push_back({"sub_path", false, true, true, [](int k, EdgeMask m) {
                         EdgeMask need = detail::path_mask(k);
                         return (m & need) == need;
                     }});
    props.push_back({"sub_cycle", false, true, true, [](int k, EdgeMask m) {
                         if (k < 3) return false;
                         EdgeMask need = detail::cycle_mask(k);
                         return (m & need) == need;
                     }});
    props.push_back({"even_edges", true, false, true,
                     [](int, EdgeMask m) { return std::popcount(m) % 2 == 0; }});
    props.push_back({"induced_path", true, false, true, [](int k, EdgeMask m) {
                         if (k == 0) return false;
                         if (std::popcount(m) != k - 1) return false;
                         for (int v = 0; v < k; ++v)
                             if (detail::mask_degree(k, m, v) > 2) return false;
                         return detail::mask_connected(k, m);
                     }});
    props.push_back({"induced_cycle", true, false, true, [](int k, EdgeMask m) {
                         if (k < 3) return false;
                         for (int v = 0; v < k; ++v)
                             if (detail::mask_degree(k, m, v) != 2) return false;
                         return detail::mask_connected(k, m);
                     }});
    props.push_back({"treewidth_ge_2", true, true, true,
                     [](int k, EdgeMask m) { return detail::mask_has_cycle(k, m); }});
    return props;
}

inline PropertyFamily find_property(const std::string& name) {
    auto props = builtin_properties();
    for (auto& p : props)
        if (p.name == name) return p;
    std::string known;
    for (const auto& p : props) known += (known.empty() ? "" : ", ") + p.name;
    throw input_error("unknown property '" + name + "' (built-ins: " + known + ")");
}

// --- Truth-table properties ------------------------------------------------
//
// A single-arity predicate given extensionally:
//
//   phi <k>
//   <edge-bitmask-hex> <labelling-permutation> <0|1>
//
// The bitmask describes a k-vertex graph (bit pair_bit(a,b) = edge between
// vertices a+1,b+1); the permutation is comma-separated 1-based values
// mapping label i to vertex pi(i). Each row fixes the value on one labelled
// graph; rows naming the same labelled graph must agree; omitted labelled
// graphs evaluate to 0. At arities other than the declared k the loaded
// property evaluates to 0.

struct TruthTable {
    int k = 0;
    std::set<EdgeMask> satisfying; // position masks with value 1
};

inline TruthTable parse_truth_table(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw input_error("empty truth-table file");
    auto [header_no, header] = lines.front();
    std::istringstream hs(header);
    std::string tag;
    int k = -1;
    if (!(hs >> tag >> k) || tag != "phi" || k < 1 || (hs >> tag))
        throw detail::line_error(header_no, "malformed header, expected 'phi <k>'");
    check_mask_order(k);

    TruthTable table;
    table.k = k;
    std::map<EdgeMask, bool> assigned;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [no, line] = lines[i];
        std::istringstream ls(line);
        std::string mask_tok, perm_tok;
        int value = -1;
        if (!(ls >> mask_tok >> perm_tok >> value) || (value != 0 && value != 1) || (ls >> tag))
            throw detail::line_error(no, "expected '<mask-hex> <perm> <0|1>'");
        EdgeMask m = 0;
        try {
            std::size_t used = 0;
            m = std::stoull(mask_tok, &used, 16);
            if (used != mask_tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw detail::line_error(no, "bad edge bitmask '" + mask_tok + "'");
        }
        if (pair_count(k) < 64 && m >= (EdgeMask(1) << pair_count(k)))
            throw detail::line_error(no, "bitmask has bits beyond the " +
                                             std::to_string(pair_count(k)) + " vertex pairs");
        std::vector<int> perm;
        std::istringstream ps(perm_tok);
        std::string item;
        while (std::getline(ps, item, ',')) {
            try {
                std::size_t used = 0;
                int v = std::stoi(item, &used);
                if (used != item.size()) throw std::invalid_argument("");
                perm.push_back(v - 1);
            } catch (const std::exception&) {
                throw detail::line_error(no, "bad permutation entry '" + item + "'");
            }
        }
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        bool bijective = static_cast<int>(perm.size()) == k;
        for (int j = 0; bijective && j < k; ++j) bijective = sorted[j] == j;
        if (!bijective)
            throw detail::line_error(no, "permutation is not a bijection on 1.." +
                                             std::to_string(k));
        EdgeMask position = permute_mask(m, perm);
        auto [it, fresh] = assigned.emplace(position, value == 1);
        if (!fresh && it->second != (value == 1))
            throw detail::line_error(no, "conflicting value for an already-defined labelled graph");
        if (value == 1) table.satisfying.insert(position);
    }
    return table;
}

inline std::string serialize_truth_table(const TruthTable& table) {
    std::ostringstream out;
    out << "phi " << table.k << "\n";
    std::string identity;
    for (int i = 1; i <= table.k; ++i) identity += (i > 1 ? "," : "") + std::to_string(i);
    for (EdgeMask m : table.satisfying) {
        out << std::hex << m << std::dec << " " << identity << " 1\n";
    }
    return out.str();
}

// Flags are computed exhaustively when the declared arity is within the
// monotonicity guard, otherwise left false (conservative claims).
inline PropertyFamily table_property(const TruthTable& table, const Limits& lim = {}) {
    PropertyFamily prop;
    prop.name = "table";
    int k = table.k;
    auto satisfying = table.satisfying;
    prop.predicate = [k, satisfying](int arity, EdgeMask m) {
        return arity == k && satisfying.count(m) > 0;
    };
    if (k <= lim.monotone_max_k) {
        bool monotone = true;
        for (EdgeMask m : satisfying)
            for (int b = 0; b < pair_count(k) && monotone; ++b)
                if (!((m >> b) & 1u)) monotone = satisfying.count(m | (EdgeMask(1) << b)) > 0;
        prop.monotone = monotone;
        bool symmetric = true;
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (EdgeMask m : satisfying)
                if (satisfying.count(permute_mask(m, perm)) == 0) {
                    symmetric = false;
                    break;
                }
        } while (symmetric && std::next_permutation(perm.begin(), perm.end()));
        prop.symmetric = symmetric;
    }
    return prop;
}

} // namespace iswp
