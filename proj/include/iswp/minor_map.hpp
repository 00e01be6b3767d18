#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "iswp/errors.hpp"
#include "iswp/graph.hpp"

namespace iswp {

// Unordered pairs {j,l} over [k], 1-based, in lexicographic order. This fixed
// order is what numbers the columns of the k x C(k,2) grid everywhere.
inline std::vector<std::pair<int, int>> pairs_of(int k) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= k; ++j)
        for (int l = j + 1; l <= k; ++l) out.emplace_back(j, l);
    return out;
}

// A witness that a pattern H contains the k x C(k,2) grid as a minor: one
// branch set of H-vertices per grid cell. Cells are indexed row-major; row i
// is 1-based, column c corresponds to pairs_of(k)[c].
struct MinorMap {
    int k = 0;
    int pattern_order = 0;
    std::vector<std::vector<int>> images;

    int cols() const { return k * (k - 1) / 2; }
    int cells() const { return k * cols(); }
    int cell_index(int row, int col) const { return (row - 1) * cols() + col; }
    const std::vector<int>& image(int row, int col) const { return images[cell_index(row, col)]; }
};

struct MinorMapViolation {
    int condition; // 1 connected, 2 disjoint, 3 grid-edge covered
    std::string detail;
};

struct MinorMapReport {
    bool valid = true;
    std::vector<MinorMapViolation> violations;
};

inline std::string cell_name(int k, int row, int col) {
    auto pr = pairs_of(k)[col];
    return "(" + std::to_string(row) + ",{" + std::to_string(pr.first) + "," +
           std::to_string(pr.second) + "})";
}

// Checks the three minor-map conditions against the pattern H: each image
// induces a connected subgraph, images are pairwise disjoint, and every grid
// edge has a host edge between its two images.
inline MinorMapReport validate_minor_map(const Graph& h, const MinorMap& m) {
    if (m.k < 2) throw input_error("minor map needs k >= 2 (no grid columns below that)");
    if (m.pattern_order != h.order())
        throw input_error("minor map declared for a pattern on " + std::to_string(m.pattern_order) +
                          " vertices, got " + std::to_string(h.order()));
    if (static_cast<int>(m.images.size()) != m.cells())
        throw input_error("minor map must define all " + std::to_string(m.cells()) + " cells");
    for (const auto& img : m.images) {
        if (img.empty()) throw input_error("empty minor-map image");
        for (int v : img)
            if (v < 0 || v >= h.order()) throw input_error("minor-map image vertex out of range");
    }

    MinorMapReport report;
    const int rows = m.k, cols = m.cols();

    for (int r = 1; r <= rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (!is_connected(induced_subgraph(h, m.image(r, c)))) {
                report.valid = false;
                report.violations.push_back(
                    {1, "image of cell " + cell_name(m.k, r, c) + " is not connected"});
            }
        }
    }

    std::vector<int> owner(h.order(), -1);
    for (int cell = 0; cell < m.cells(); ++cell) {
        for (int v : m.images[cell]) {
            if (owner[v] >= 0 && owner[v] != cell) {
                report.valid = false;
                report.violations.push_back(
                    {2, "vertex " + std::to_string(v) + " appears in two images"});
            }
            owner[v] = cell;
        }
    }

    auto images_touch = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int u : a)
            for (int v : b)
                if (h.has_edge(u, v)) return true;
        return false;
    };
    auto require_edge = [&](int r1, int c1, int r2, int c2) {
        if (!images_touch(m.image(r1, c1), m.image(r2, c2))) {
            report.valid = false;
            report.violations.push_back(
                {3, "no host edge between images of grid-adjacent cells " +
                        cell_name(m.k, r1, c1) + " and " + cell_name(m.k, r2, c2)});
        }
    };
    for (int r = 1; r <= rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) require_edge(r, c, r, c + 1);
            if (r + 1 <= rows) require_edge(r, c, r + 1, c);
        }
    return report;
}

// --- Minor-map file format ---------------------------------------------------
//
//   mm <k> <|V(H)|>
//   cell <i> <j> <l> : <h-vertex ids...>     (one line per grid cell)

inline MinorMap parse_minor_map(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw input_error("empty minor-map file");

    auto [header_no, header] = lines.front();
    std::istringstream hs(header);
    std::string tag;
    int k = -1, order = -1;
    if (!(hs >> tag >> k >> order) || tag != "mm" || k < 2 || order < 1 || (hs >> tag))
        throw detail::line_error(header_no, "malformed header, expected 'mm <k> <|V(H)|>'");

    MinorMap m;
    m.k = k;
    m.pattern_order = order;
    m.images.assign(m.cells(), {});
    auto pairs = pairs_of(k);
    std::vector<bool> seen(m.cells(), false);

    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [no, line] = lines[i];
        std::istringstream cs(line);
        int row = 0, j = 0, l = 0;
        char colon = 0;
        if (!(cs >> tag >> row >> j >> l >> colon) || tag != "cell" || colon != ':')
            throw detail::line_error(no, "malformed line, expected 'cell <i> <j> <l> : <ids...>'");
        if (row < 1 || row > k) throw detail::line_error(no, "row out of range");
        auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(j, l));
        if (it == pairs.end()) throw detail::line_error(no, "column pair out of range or j >= l");
        int cell = m.cell_index(row, static_cast<int>(it - pairs.begin()));
        if (seen[cell]) throw detail::line_error(no, "cell defined twice");
        seen[cell] = true;
        std::set<int> ids;
        int v;
        while (cs >> v) {
            if (v < 0 || v >= order) throw detail::line_error(no, "image vertex out of range");
            if (!ids.insert(v).second) throw detail::line_error(no, "repeated image vertex");
        }
        if (ids.empty()) throw detail::line_error(no, "empty image");
        m.images[cell].assign(ids.begin(), ids.end());
    }
    for (int cell = 0; cell < m.cells(); ++cell)
        if (!seen[cell])
            throw input_error("missing cell line for cell index " + std::to_string(cell));
    return m;
}

inline std::string serialize_minor_map(const MinorMap& m) {
    std::ostringstream out;
    out << "mm " << m.k << " " << m.pattern_order << "\n";
    auto pairs = pairs_of(m.k);
    for (int r = 1; r <= m.k; ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            out << "cell " << r << " " << pairs[c].first << " " << pairs[c].second << " :";
            for (int v : m.image(r, c)) out << " " << v;
            out << "\n";
        }
    }
    return out.str();
}

} // namespace iswp
