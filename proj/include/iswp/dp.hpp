#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "iswp/counting.hpp"
#include "iswp/errors.hpp"
#include "iswp/graph.hpp"
#include "iswp/labelled.hpp"
#include "iswp/numbers.hpp"
#include "iswp/tree_decomposition.hpp"

namespace iswp {

// Oracle partner of the DP: injective colourful maps theta with every
// pattern edge carried to an edge of g (copies, not induced).
inline Count count_colourful_copies_bruteforce(const Graph& pattern, const Graph& g,
                                               const Colouring& f, const Limits& lim = {}) {
    int k = pattern.order();
    check_mask_order(k);
    f.validate(g.order());
    if (f.k != k)
        throw input_error("colouring uses " + std::to_string(f.k) + " colours, pattern has " +
                          std::to_string(k) + " vertices");
    Count total = 0;
    for_each_tuple(g.order(), k, [&](const std::vector<int>& tuple) {
        if (!f.colourful(tuple)) return true;
        for (auto [a, b] : pattern.edges())
            if (!g.has_edge(tuple[a], tuple[b])) return true;
        ++total;
        return true;
    }, lim);
    return total;
}

namespace detail {

struct NiceNode {
    enum Kind { leaf, introduce, forget, join } kind = leaf;
    std::vector<int> bag; // sorted pattern vertices
    int vertex = -1;      // introduced/forgotten pattern vertex
    int child1 = -1;
    int child2 = -1;
};

// Rewrites a rooted decomposition into leaf/introduce/forget/join nodes with
// an empty root bag, one vertex changing per step.
class NiceBuilder {
  public:
    explicit NiceBuilder(const TreeDecomposition& td) : td_(td) {}

    // Returns (nodes, root index).
    std::pair<std::vector<NiceNode>, int> build() {
        int top = build_subtree(0, -1);
        // Forget the original root bag down to the empty root.
        std::vector<int> bag = nodes_[top].bag;
        while (!bag.empty()) {
            int v = bag.back();
            bag.pop_back();
            top = add_node({NiceNode::forget, bag, v, top, -1});
        }
        return {std::move(nodes_), top};
    }

  private:
    const TreeDecomposition& td_;
    std::vector<NiceNode> nodes_;

    int add_node(NiceNode node) {
        nodes_.push_back(std::move(node));
        return static_cast<int>(nodes_.size()) - 1;
    }

    // Chain of introduces growing the empty bag into `target`.
    int grow_from_leaf(const std::vector<int>& target) {
        int cur = add_node({NiceNode::leaf, {}, -1, -1, -1});
        std::vector<int> bag;
        for (int v : target) {
            bag.push_back(v);
            cur = add_node({NiceNode::introduce, bag, v, cur, -1});
        }
        return cur;
    }

    // Forget-then-introduce chain turning bag(child top) into `target`.
    int reshape(int top, const std::vector<int>& target) {
        std::vector<int> bag = nodes_[top].bag;
        std::vector<int> removed, added;
        std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(),
                            std::back_inserter(removed));
        std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(),
                            std::back_inserter(added));
        for (int v : removed) {
            bag.erase(std::find(bag.begin(), bag.end(), v));
            top = add_node({NiceNode::forget, bag, v, top, -1});
        }
        for (int v : added) {
            bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
            top = add_node({NiceNode::introduce, bag, v, top, -1});
        }
        return top;
    }

    int build_subtree(int u, int parent) {
        std::vector<int> bag = td_.bags[u];
        std::vector<int> children;
        for (int c : td_.tree.neighbours(u))
            if (c != parent) children.push_back(c);
        if (children.empty()) return grow_from_leaf(bag);
        int combined = -1;
        for (int c : children) {
            int branch = reshape(build_subtree(c, u), bag);
            combined = (combined < 0) ? branch
                                      : add_node({NiceNode::join, bag, -1, combined, branch});
        }
        return combined;
    }
};

} // namespace detail

// Counts injective colourful copies of the pattern in g by dynamic
// programming over the decomposition. Tables are keyed by (bag assignment,
// set of colours used by already-forgotten vertices); colour-distinctness
// across the whole map both enforces colourfulness and stands in for
// injectivity, and lets join nodes combine sides by disjoint colour sets.
inline Count count_colourful_copies_dp(const LabelledGraph& pattern, const TreeDecomposition& td,
                                       const Graph& g, const Colouring& f,
                                       const Limits& lim = {}) {
    const Graph& h = pattern.graph;
    int k = h.order();
    check_mask_order(k);
    if (k == 0) return 1; // the empty map
    f.validate(g.order());
    if (f.k != k)
        throw input_error("colouring uses " + std::to_string(f.k) + " colours, pattern has " +
                          std::to_string(k) + " vertices");
    TdReport report = validate_tree_decomposition(h, td);
    if (!report.valid)
        throw input_error("decomposition does not validate against the pattern: " +
                          report.violations.front().detail);

    auto [nodes, root] = detail::NiceBuilder(td).build();

    using Key = std::pair<std::vector<int>, std::uint32_t>;
    using Table = std::map<Key, Count>;
    std::vector<Table> tables(nodes.size());
    std::uint64_t steps = 0;
    auto charge = [&](std::uint64_t amount) {
        steps += amount;
        if (steps > lim.node_budget)
            throw budget_error("dynamic program exceeded the state budget of " +
                               std::to_string(lim.node_budget) + " steps");
    };

    for (std::size_t x = 0; x < nodes.size(); ++x) {
        const auto& node = nodes[x];
        Table& table = tables[x];
        switch (node.kind) {
        case detail::NiceNode::leaf:
            table[{{}, 0}] = 1;
            break;
        case detail::NiceNode::introduce: {
            const Table& child = tables[node.child1];
            const auto& cbag = nodes[node.child1].bag;
            auto pos = static_cast<std::size_t>(
                std::lower_bound(node.bag.begin(), node.bag.end(), node.vertex) -
                node.bag.begin());
            std::vector<int> hneighbours; // positions in cbag adjacent to the new vertex
            for (std::size_t i = 0; i < cbag.size(); ++i)
                if (h.has_edge(cbag[i], node.vertex)) hneighbours.push_back(static_cast<int>(i));
            for (const auto& [key, cnt] : child) {
                const auto& [assign, used] = key;
                charge(g.order());
                for (int w = 0; w < g.order(); ++w) {
                    std::uint32_t cbit = std::uint32_t(1) << (f.colour[w] - 1);
                    if (used & cbit) continue;
                    bool ok = true;
                    for (std::size_t i = 0; ok && i < assign.size(); ++i)
                        ok = f.colour[assign[i]] != f.colour[w];
                    for (int i : hneighbours)
                        if (!ok || !g.has_edge(assign[i], w)) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    std::vector<int> extended = assign;
                    extended.insert(extended.begin() + pos, w);
                    table[{std::move(extended), used}] += cnt;
                }
            }
            break;
        }
        case detail::NiceNode::forget: {
            const Table& child = tables[node.child1];
            const auto& cbag = nodes[node.child1].bag;
            auto pos = static_cast<std::size_t>(
                std::lower_bound(cbag.begin(), cbag.end(), node.vertex) - cbag.begin());
            for (const auto& [key, cnt] : child) {
                charge(1);
                const auto& [assign, used] = key;
                std::uint32_t cbit = std::uint32_t(1) << (f.colour[assign[pos]] - 1);
                std::vector<int> reduced = assign;
                reduced.erase(reduced.begin() + pos);
                table[{std::move(reduced), used | cbit}] += cnt;
            }
            break;
        }
        case detail::NiceNode::join: {
            const Table& left = tables[node.child1];
            const Table& right = tables[node.child2];
            for (auto it = left.begin(); it != left.end(); ++it) {
                const auto& [assign, used_left] = it->first;
                auto lo = right.lower_bound({assign, 0});
                auto hi = right.upper_bound({assign, ~std::uint32_t(0)});
                for (auto jt = lo; jt != hi; ++jt) {
                    charge(1);
                    std::uint32_t used_right = jt->first.second;
                    if (used_left & used_right) continue;
                    table[{assign, used_left | used_right}] += it->second * jt->second;
                }
            }
            break;
        }
        }
        // Child tables feeding only this node could be released here; kept
        // for simplicity at the pattern sizes supported.
    }

    std::uint32_t all = (k >= 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << k) - 1);
    auto it = tables[root].find({{}, all});
    return it == tables[root].end() ? Count(0) : it->second;
}

// Convenience: decompose the pattern on the fly.
inline Count count_colourful_copies_dp(const LabelledGraph& pattern, const Graph& g,
                                       const Colouring& f, const Limits& lim = {}) {
    return count_colourful_copies_dp(pattern, greedy_tree_decomposition(pattern.graph), g, f, lim);
}

} // namespace iswp
