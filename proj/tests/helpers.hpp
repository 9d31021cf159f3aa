#ifndef SPC_TEST_HELPERS_HPP
#define SPC_TEST_HELPERS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "spc/graph.hpp"
#include "spc/words.hpp"

namespace spc::test {

// 12-cycle 0..11 with three attached paths:
//   A: 0-12-13-14-15-16-3   (6 edges)
//   B: 11-17-18-8           (3 edges)
//   C: 14-19-20-6           (3 edges, hangs off an interior vertex of A)
// Not minimally 2-connected (the cycle edge 11-0 is removable) and its
// longest cycle has 15 edges.
inline Graph twelve_cycle_with_ears() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 12; ++i) e.emplace_back(i, (i + 1) % 12);
    e.insert(e.end(), {{0, 12}, {12, 13}, {13, 14}, {14, 15}, {15, 16}, {16, 3}});
    e.insert(e.end(), {{11, 17}, {17, 18}, {18, 8}});
    e.insert(e.end(), {{14, 19}, {19, 20}, {20, 6}});
    return Graph::from_edges(21, e);
}

// 10-cycle 0..9 with three attached paths:
//   A: 0-10-11-12-4   (4 edges)
//   B: 9-13-14-5      (3 edges)
//   C: 1-15-3         (2 edges)
// Minimally 2-connected; longest-first ear lengths are (10, 4, 3, 2).
inline Graph ten_cycle_with_ears() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 10; ++i) e.emplace_back(i, (i + 1) % 10);
    e.insert(e.end(), {{0, 10}, {10, 11}, {11, 12}, {12, 4}});
    e.insert(e.end(), {{9, 13}, {13, 14}, {14, 5}});
    e.insert(e.end(), {{1, 15}, {15, 3}});
    return Graph::from_edges(16, e);
}

inline Graph octahedron() {
    // K_{2,2,2}: complement of a perfect matching on 6 vertices.
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3) e.emplace_back(u, v);
    return Graph::from_edges(6, e);
}

inline Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);       // outer
    for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);  // star
    for (int i = 0; i < 5; ++i) e.emplace_back(i, 5 + i);             // spokes
    return Graph::from_edges(10, e);
}

// Lengths of all distinct simple cycles, by exhaustive DFS (small graphs).
inline std::vector<int> all_cycle_lengths(const Graph& g) {
    std::vector<int> lengths;
    int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    // Cycles are canonicalized by smallest vertex first and second vertex
    // smaller than the last, so each is emitted exactly once.
    auto dfs = [&](auto&& self, int v, int v0) -> void {
        for (const auto& a : g.neighbors(v)) {
            if (a.to == v0 && path.size() >= 3 && path[1] < path.back())
                lengths.push_back(static_cast<int>(path.size()));
            if (a.to <= v0 || on_path[a.to]) continue;
            on_path[a.to] = 1;
            path.push_back(a.to);
            self(self, a.to, v0);
            path.pop_back();
            on_path[a.to] = 0;
        }
    };
    for (int v0 = 0; v0 < n; ++v0) {
        path = {v0};
        on_path[v0] = 1;
        dfs(dfs, v0, v0);
        on_path[v0] = 0;
    }
    return lengths;
}

inline std::optional<int> brute_girth(const Graph& g) {
    auto ls = all_cycle_lengths(g);
    if (ls.empty()) return std::nullopt;
    return *std::min_element(ls.begin(), ls.end());
}

// O(n^3) squarefreeness check used as an oracle.
inline bool naive_nonrepetitive(const ColorSequence& s) {
    int n = static_cast<int>(s.size());
    for (int len = 1; 2 * len <= n; ++len)
        for (int i = 0; i + 2 * len <= n; ++i) {
            bool square = true;
            for (int j = 0; j < len; ++j)
                if (s[i + j] != s[i + len + j]) {
                    square = false;
                    break;
                }
            if (square) return false;
        }
    return true;
}

// Exhaustive valid-path existence with no pruning at all (small graphs).
inline bool naive_path_exists(const Graph& g, const EdgeColoring& c, int u, int v,
                              const SequenceProperty& p) {
    int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<int> colors;
    bool found = false;
    auto dfs = [&](auto&& self, int w) -> void {
        if (found) return;
        if (w == v) {
            if (p.is_valid(colors)) found = true;
            return;
        }
        for (const auto& a : g.neighbors(w)) {
            if (on_path[a.to]) continue;
            on_path[a.to] = 1;
            colors.push_back(c.color[a.edge]);
            self(self, a.to);
            colors.pop_back();
            on_path[a.to] = 0;
        }
    };
    on_path[u] = 1;
    dfs(dfs, u);
    return found;
}

namespace detail {
inline bool connected_without(const Graph& g, unsigned removed_mask) {
    int n = g.vertex_count();
    int start = -1, kept = 0;
    for (int v = 0; v < n; ++v)
        if (!(removed_mask >> v & 1u)) {
            if (start < 0) start = v;
            ++kept;
        }
    if (kept <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& a : g.neighbors(v))
            if (!(removed_mask >> a.to & 1u) && !seen[a.to]) {
                seen[a.to] = 1;
                ++visited;
                stack.push_back(a.to);
            }
    }
    return visited == kept;
}
}  // namespace detail

// Smallest number of vertices whose removal disconnects the rest (or n-1 for
// complete graphs), by subset enumeration. Needs n <= 20 or so.
inline int brute_vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (!detail::connected_without(g, 0)) return 0;
    for (int size = 1; size < n - 1; ++size)
        for (unsigned mask = 0; mask < (1u << n); ++mask)
            if (__builtin_popcount(mask) == size && !detail::connected_without(g, mask))
                return size;
    return n - 1;
}

// Global minimum edge cut by bipartition enumeration.
inline int brute_edge_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (!detail::connected_without(g, 0)) return 0;
    int best = g.edge_count();
    for (unsigned side = 1; side < (1u << (n - 1)); ++side) {
        // vertex n-1 always on the other side, so each bipartition once
        int cut = 0;
        for (auto [u, v] : g.edges())
            if (((side >> u & 1u) != 0) != ((side >> v & 1u) != 0)) ++cut;
        best = std::min(best, cut);
    }
    return best;
}

}  // namespace spc::test

#endif
