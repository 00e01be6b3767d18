#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iswp/errors.hpp"
#include "iswp/graph.hpp"
#include "iswp/minor_map.hpp"

namespace iswp {

enum class PatternFamily { clique, path, cycle, perfect_matching, grid, subdivided_grid, clique_grid };

struct PatternResult {
    Graph graph;
    // Present for grid-based families whose shape matches a k x C(k,2)
    // domain; witnesses the grid minor used by the gadget constructor.
    std::optional<MinorMap> minor_map;
};

namespace detail {

inline Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw input_error("grid needs rows, cols >= 1");
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

// Identity map: cell (i,{j,l}) -> the single grid vertex in row i and the
// column numbered by pairs_of(k); shape-compatible only when cols = C(k,2).
inline MinorMap identity_grid_map(int rows, int cols) {
    MinorMap m;
    m.k = rows;
    m.pattern_order = rows * cols;
    m.images.resize(m.cells());
    for (int r = 1; r <= rows; ++r)
        for (int c = 0; c < cols; ++c) m.images[m.cell_index(r, c)] = {(r - 1) * cols + c};
    return m;
}

} // namespace detail

inline PatternResult generate_pattern(PatternFamily family, const std::vector<int>& params) {
    auto need = [&](std::size_t count, const std::string& what) {
        if (params.size() != count) throw input_error("family expects " + what);
    };
    switch (family) {
        case PatternFamily::clique: {
            need(1, "one parameter n");
            int n = params[0];
            if (n < 0) throw input_error("clique order must be >= 0");
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            return {g, std::nullopt};
        }
        case PatternFamily::path: {
            need(1, "one parameter n");
            int n = params[0];
            if (n < 1) throw input_error("path order must be >= 1");
            Graph g(n);
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            return {g, std::nullopt};
        }
        case PatternFamily::cycle: {
            need(1, "one parameter n");
            int n = params[0];
            if (n < 3) throw input_error("cycle order must be >= 3");
            Graph g(n);
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            g.add_edge(0, n - 1);
            return {g, std::nullopt};
        }
        case PatternFamily::perfect_matching: {
            need(1, "one parameter n");
            int n = params[0];
            if (n < 2 || n % 2 != 0) throw input_error("perfect matching needs even order >= 2");
            Graph g(n);
            for (int v = 0; v < n; v += 2) g.add_edge(v, v + 1);
            return {g, std::nullopt};
        }
        case PatternFamily::grid: {
            need(2, "two parameters rows, cols");
            int rows = params[0], cols = params[1];
            Graph g = detail::make_grid(rows, cols);
            std::optional<MinorMap> map;
            if (rows >= 2 && cols == rows * (rows - 1) / 2)
                map = detail::identity_grid_map(rows, cols);
            return {g, map};
        }
        case PatternFamily::clique_grid: {
            need(1, "one parameter k");
            int k = params[0];
            if (k < 2) throw input_error("clique_grid needs k >= 2");
            int cols = k * (k - 1) / 2;
            return {detail::make_grid(k, cols), detail::identity_grid_map(k, cols)};
        }
        case PatternFamily::subdivided_grid: {
            need(1, "one parameter k");
            int k = params[0];
            if (k < 2) throw input_error("subdivided_grid needs k >= 2");
            Graph base = detail::make_grid(k, k);
            Graph g(k * k + base.size());
            // Subdivision vertex for base edge #e is k*k + e (base edges sorted).
            for (int e = 0; e < base.size(); ++e) {
                auto [u, v] = base.edges()[e];
                g.add_edge(std::min(u, k * k + e), std::max(u, k * k + e));
                g.add_edge(std::min(v, k * k + e), std::max(v, k * k + e));
            }
            // Witness the largest kp x C(kp,2) grid minor that fits in the
            // k x k base grid (top-left block): each cell maps to its base
            // vertex plus the subdivision vertices of that vertex's
            // rightward/downward domain-grid edges.
            int kp = 2;
            while ((kp + 1) <= k && (kp + 1) * kp / 2 <= k) ++kp;
            int cols = kp * (kp - 1) / 2;
            auto base_edge_index = [&](int u, int v) {
                auto key = std::minmax(u, v);
                const auto& edges = base.edges();
                auto it = std::lower_bound(edges.begin(), edges.end(),
                                           std::pair<int, int>(key.first, key.second));
                return static_cast<int>(it - edges.begin());
            };
            MinorMap m;
            m.k = kp;
            m.pattern_order = g.order();
            m.images.resize(m.cells());
            auto id = [&](int r, int c) { return r * k + c; };
            for (int r = 0; r < kp; ++r)
                for (int c = 0; c < cols; ++c) {
                    std::vector<int> image{id(r, c)};
                    if (c + 1 < cols)
                        image.push_back(k * k + base_edge_index(id(r, c), id(r, c + 1)));
                    if (r + 1 < kp)
                        image.push_back(k * k + base_edge_index(id(r, c), id(r + 1, c)));
                    m.images[m.cell_index(r + 1, c)] = image;
                }
            return {g, m};
        }
    }
    throw input_error("unknown pattern family");
}

// Textual pattern specs for the CLI: "grid3" (3x3 grid), "grid:<r>:<c>",
// "clique_grid:<k>", "subdivided_grid:<k>", "clique:<n>", "path:<n>",
// "cycle:<n>", "perfect_matching:<n>".
inline PatternResult generate_pattern_by_name(const std::string& spec) {
    auto parse_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw input_error("bad number '" + s + "' in pattern spec '" + spec + "'");
        }
    };
    if (spec.rfind("grid", 0) == 0 && spec.find(':') == std::string::npos && spec.size() > 4) {
        int n = parse_int(spec.substr(4));
        return generate_pattern(PatternFamily::grid, {n, n});
    }
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    const std::string& name = parts[0];
    std::vector<int> params;
    for (std::size_t i = 1; i < parts.size(); ++i) params.push_back(parse_int(parts[i]));
    if (name == "clique") return generate_pattern(PatternFamily::clique, params);
    if (name == "path") return generate_pattern(PatternFamily::path, params);
    if (name == "cycle") return generate_pattern(PatternFamily::cycle, params);
    if (name == "perfect_matching") return generate_pattern(PatternFamily::perfect_matching, params);
    if (name == "grid") return generate_pattern(PatternFamily::grid, params);
    if (name == "subdivided_grid") return generate_pattern(PatternFamily::subdivided_grid, params);
    if (name == "clique_grid") return generate_pattern(PatternFamily::clique_grid, params);
    throw input_error("unknown pattern spec '" + spec + "'");
}

} // namespace iswp
