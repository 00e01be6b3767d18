#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "iswp/errors.hpp"
#include "iswp/graph.hpp"

namespace iswp {

// Bags over a tree. Width is a validated upper bound on treewidth, never an
// exactness claim. The tree being a tree is structural (enforced on
// construction/parse); the three decomposition conditions are data checked
// by validate_tree_decomposition.
struct TreeDecomposition {
    Graph tree;
    std::vector<std::vector<int>> bags; // non-empty, sorted vertex lists
    int n = 0;                          // order of the decomposed graph

    int width() const {
        std::size_t largest = 0;
        for (const auto& bag : bags) largest = std::max(largest, bag.size());
        return static_cast<int>(largest) - 1;
    }

    void check_structure() const {
        if (bags.empty()) throw input_error("decomposition needs at least one bag");
        if (tree.order() != static_cast<int>(bags.size()))
            throw input_error("tree order differs from bag count");
        if (!is_tree(tree)) throw input_error("bag graph is not a tree");
        for (const auto& bag : bags) {
            if (bag.empty()) throw input_error("empty bag");
            for (int v : bag)
                if (v < 0 || v >= n) throw input_error("bag vertex out of range");
        }
    }
};

struct TdViolation {
    int condition; // 1 vertex covered, 2 edge covered, 3 occurrence subtree connected
    std::string detail;
};

struct TdReport {
    bool valid = true;
    int width = -1;
    std::vector<TdViolation> violations;
};

inline TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    td.check_structure();
    if (td.n != g.order())
        throw input_error("decomposition declared for " + std::to_string(td.n) +
                          " vertices, graph has " + std::to_string(g.order()));
    TdReport report;
    report.width = td.width();

    std::vector<std::vector<int>> occurs(g.order());
    for (std::size_t b = 0; b < td.bags.size(); ++b)
        for (int v : td.bags[b]) occurs[v].push_back(static_cast<int>(b));

    for (int v = 0; v < g.order(); ++v) {
        if (occurs[v].empty()) {
            report.valid = false;
            report.violations.push_back({1, "vertex " + std::to_string(v) + " in no bag"});
        }
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int b : occurs[u]) {
            const auto& bag = td.bags[b];
            if (std::binary_search(bag.begin(), bag.end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            report.valid = false;
            report.violations.push_back(
                {2, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} in no bag"});
        }
    }
    for (int v = 0; v < g.order(); ++v) {
        if (occurs[v].size() < 2) continue;
        // BFS inside the occurrence set only.
        std::set<int> members(occurs[v].begin(), occurs[v].end());
        std::vector<int> stack{occurs[v][0]};
        std::set<int> seen{occurs[v][0]};
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            for (int nb : td.tree.neighbours(b)) {
                if (members.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    stack.push_back(nb);
                }
            }
        }
        if (seen.size() != members.size()) {
            report.valid = false;
            report.violations.push_back(
                {3, "bags of vertex " + std::to_string(v) + " are disconnected in the tree"});
        }
    }
    return report;
}

inline TreeDecomposition single_bag_decomposition(const Graph& g) {
    if (g.order() == 0) throw input_error("cannot decompose the empty graph");
    TreeDecomposition td;
    td.n = g.order();
    td.tree = Graph(1);
    std::vector<int> all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    td.bags = {all};
    return td;
}

// Min-degree (min-fill tie-broken by id) elimination ordering: eliminate a
// vertex, clique its remaining neighbourhood, record {v} + neighbourhood as
// the bag, and attach it under the bag of the first later-eliminated bag
// member. Not optimal, but always a valid decomposition of small patterns.
inline TreeDecomposition greedy_tree_decomposition(const Graph& g) {
    if (g.order() == 0) throw input_error("cannot decompose the empty graph");
    int n = g.order();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;

    std::vector<bool> gone(n, false);
    std::vector<int> order;
    std::vector<std::vector<int>> bag_of(n);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_deg = n + 1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            int d = 0;
            for (int u = 0; u < n; ++u)
                if (!gone[u] && u != v && adj[v][u]) ++d;
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        std::vector<int> nb;
        for (int u = 0; u < n; ++u)
            if (!gone[u] && u != best && adj[best][u]) nb.push_back(u);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = true;
        bag_of[best] = nb;
        bag_of[best].push_back(best);
        std::sort(bag_of[best].begin(), bag_of[best].end());
        gone[best] = true;
        order.push_back(best);
    }

    TreeDecomposition td;
    td.n = n;
    td.tree = Graph(n);
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        td.bags.push_back(bag_of[v]);
        // Attach to the earliest-eliminated bag member after v, if any.
        int parent = -1, parent_pos = n;
        for (int u : bag_of[v]) {
            if (u != v && position[u] > i && position[u] < parent_pos) {
                parent_pos = position[u];
                parent = u;
            }
        }
        if (parent >= 0) td.tree.add_edge(i, position[parent]);
    }
    // Isolated components produce forest pieces; chain their roots so the
    // bag graph is a single tree.
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        bool has_parent = false;
        for (int u : bag_of[order[i]])
            if (u != order[i] && position[u] > i) has_parent = true;
        if (!has_parent) roots.push_back(i);
    }
    for (std::size_t r = 1; r < roots.size(); ++r) td.tree.add_edge(roots[r - 1], roots[r]);
    return td;
}

// --- Tree-decomposition file format -------------------------------------------
//
//   td <num_bags> <width+1> <n>
//   b <bag-id> <v...>         (0-based bag ids, non-empty bags)
//   e <b1> <b2>               (tree edges)

inline TreeDecomposition parse_tree_decomposition(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw input_error("empty decomposition file");

    auto [header_no, header] = lines.front();
    std::istringstream hs(header);
    std::string tag;
    int bags = -1, width1 = -1, n = -1;
    if (!(hs >> tag >> bags >> width1 >> n) || tag != "td" || bags < 1 || width1 < 1 || n < 0 ||
        (hs >> tag))
        throw detail::line_error(header_no, "malformed header, expected 'td <num_bags> <width+1> <n>'");

    TreeDecomposition td;
    td.n = n;
    td.tree = Graph(bags);
    td.bags.assign(bags, {});
    std::vector<bool> seen(bags, false);

    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [no, line] = lines[i];
        std::istringstream ls(line);
        ls >> tag;
        if (tag == "b") {
            int id = -1;
            if (!(ls >> id) || id < 0 || id >= bags)
                throw detail::line_error(no, "bad bag id");
            if (seen[id]) throw detail::line_error(no, "bag defined twice");
            seen[id] = true;
            std::set<int> verts;
            int v;
            while (ls >> v) {
                if (v < 0 || v >= n) throw detail::line_error(no, "bag vertex out of range");
                verts.insert(v);
            }
            if (verts.empty()) throw detail::line_error(no, "empty bag");
            td.bags[id].assign(verts.begin(), verts.end());
        } else if (tag == "e") {
            int a = -1, b = -1;
            if (!(ls >> a >> b) || (ls >> tag) || a < 0 || b < 0 || a >= bags || b >= bags)
                throw detail::line_error(no, "malformed tree edge");
            try {
                td.tree.add_edge(a, b);
            } catch (const input_error& err) {
                throw detail::line_error(no, err.what());
            }
        } else {
            throw detail::line_error(no, "unknown line type '" + tag + "'");
        }
    }
    for (int b = 0; b < bags; ++b)
        if (!seen[b]) throw input_error("missing bag line for bag " + std::to_string(b));
    td.check_structure();
    if (td.width() + 1 != width1)
        throw input_error("declared width+1 = " + std::to_string(width1) +
                          " but largest bag has " + std::to_string(td.width() + 1) + " vertices");
    return td;
}

inline std::string serialize_tree_decomposition(const TreeDecomposition& td) {
    std::ostringstream out;
    out << "td " << td.bags.size() << " " << td.width() + 1 << " " << td.n << "\n";
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        out << "b " << b;
        for (int v : td.bags[b]) out << " " << v;
        out << "\n";
    }
    for (auto [a, b] : td.tree.edges()) out << "e " << a << " " << b << "\n";
    return out.str();
}

} // namespace iswp
