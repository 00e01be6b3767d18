#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "iswp/errors.hpp"

namespace iswp {

// Simple undirected graph over dense 0-based vertex ids. Adjacency is O(1);
// the edge list is kept sorted so that iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, false) {
        if (n < 0) throw input_error("negative vertex count");
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const {
        return u >= 0 && v >= 0 && u < n_ && v < n_ && u != v && adj_[idx(u, v)];
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("self-loop");
        if (adj_[idx(u, v)]) throw input_error("duplicate edge");
        adj_[idx(u, v)] = adj_[idx(v, u)] = true;
        auto e = std::minmax(u, v);
        edges_.insert(std::lower_bound(edges_.begin(), edges_.end(),
                                       std::pair<int, int>(e.first, e.second)),
                      {e.first, e.second});
    }

    // Sorted (u,v) pairs with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<int> neighbours(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u != v && adj_[idx(u, v)]) out.push_back(u);
        return out;
    }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n_; ++u)
            if (u != v && adj_[idx(u, v)]) ++d;
        return d;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * n_ + v;
    }

    int n_ = 0;
    std::vector<bool> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// G[verts]: the induced subgraph; new vertex i corresponds to verts[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<bool> seen(g.order(), false);
    for (int v : verts) {
        if (v < 0 || v >= g.order()) throw input_error("subgraph vertex out of range");
        if (seen[v]) throw input_error("repeated subgraph vertex");
        seen[v] = true;
    }
    Graph sub(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j]))
                sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return sub;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<bool> seen(g.order(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbours(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == g.order();
}

inline bool is_tree(const Graph& g) {
    return g.order() > 0 && g.size() == g.order() - 1 && is_connected(g);
}

// --- Graph file format ------------------------------------------------------
//
//   p <n> <m>
//   e <u> <v>        (m lines, 0 <= u < v < n)
//
// '#'-prefixed lines are comments. Errors carry 1-based line numbers.

namespace detail {

inline std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        out.emplace_back(no, line);
    }
    return out;
}

inline input_error line_error(int line, const std::string& what) {
    return input_error("line " + std::to_string(line) + ": " + what);
}

} // namespace detail

inline Graph parse_graph(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw input_error("empty graph file");

    auto [header_no, header] = lines.front();
    std::istringstream hs(header);
    std::string tag;
    long long n = -1, m = -1;
    if (!(hs >> tag >> n >> m) || tag != "p" || n < 0 || m < 0 || (hs >> tag))
        throw detail::line_error(header_no, "malformed header, expected 'p <n> <m>'");

    Graph g(static_cast<int>(n));
    long long seen = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [no, line] = lines[i];
        std::istringstream es(line);
        long long u = -1, v = -1;
        if (!(es >> tag >> u >> v) || tag != "e" || (es >> tag))
            throw detail::line_error(no, "malformed line, expected 'e <u> <v>'");
        if (u == v) throw detail::line_error(no, "self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw detail::line_error(no, "vertex id out of range [0," + std::to_string(n) + ")");
        if (u > v) throw detail::line_error(no, "endpoints must satisfy u < v");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw detail::line_error(no, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen != m)
        throw input_error("edge count mismatch: header declares " + std::to_string(m) +
                          " edges, found " + std::to_string(seen));
    return g;
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << " " << g.size() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

} // namespace iswp
