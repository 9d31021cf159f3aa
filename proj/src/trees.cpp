#include "spc/trees.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

namespace spc {

namespace {

// One forest of the packing: edge membership plus enough structure to find
// the unique forest path between two vertices.
class Forest {
public:
    Forest(const Graph& g) : g_(g), in_forest_(g.edge_count(), 0) {}

    bool contains(int edge) const { return in_forest_[edge]; }
    void insert(int edge) { in_forest_[edge] = 1; }
    void erase(int edge) { in_forest_[edge] = 0; }

    int size() const {
        int s = 0;
        for (char b : in_forest_) s += b;
        return s;
    }

    bool same_component(int u, int v) const { return !path_between(u, v).empty() || u == v; }

    // Edge ids on the forest path u..v; empty if different components.
    std::vector<int> path_between(int u, int v) const {
        int n = g_.vertex_count();
        std::vector<int> pred_edge(n, -1), pred(n, -1);
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(u);
        seen[u] = 1;
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            if (w == v) break;
            for (const auto& a : g_.neighbors(w))
                if (in_forest_[a.edge] && !seen[a.to]) {
                    seen[a.to] = 1;
                    pred[a.to] = w;
                    pred_edge[a.to] = a.edge;
                    q.push(a.to);
                }
        }
        std::vector<int> path;
        if (!seen[v]) return path;
        for (int w = v; w != u; w = pred[w]) path.push_back(pred_edge[w]);
        return path;
    }

private:
    const Graph& g_;
    std::vector<char> in_forest_;
};

}  // namespace

int SpanningTreePair::height1() const {
    return *std::max_element(depth1.begin(), depth1.end());
}
int SpanningTreePair::height2() const {
    return *std::max_element(depth2.begin(), depth2.end());
}

std::optional<SpanningTreePair> two_edge_disjoint_spanning_trees(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    int n = g.vertex_count();
    int m = g.edge_count();
    Forest forests[2] = {Forest(g), Forest(g)};

    // home[e]: forest currently holding e, or -1.
    std::vector<int> home(m, -1);

    for (int e0 = 0; e0 < m; ++e0) {
        // Augmenting search: try to place e0, moving blocked edges between
        // forests along a labeled exchange chain.
        std::vector<int> pred(m, -1);
        std::vector<char> labeled(m, 0);
        labeled[e0] = 1;
        std::queue<std::pair<int, int>> q;  // (edge, target forest)
        q.emplace(e0, 0);
        q.emplace(e0, 1);
        bool placed = false;
        while (!q.empty() && !placed) {
            auto [f, target] = q.front();
            q.pop();
            auto [fu, fv] = g.edge(f);
            if (!forests[target].same_component(fu, fv)) {
                // Insert f here and walk the chain back, each predecessor
                // taking the slot its successor vacated.
                int cur = f, into = target;
                while (true) {
                    int prev_home = home[cur];
                    forests[into].insert(cur);
                    home[cur] = into;
                    if (cur == e0) break;
                    assert(prev_home == 1 - into);
                    forests[prev_home].erase(cur);
                    cur = pred[cur];
                    into = prev_home;
                }
                placed = true;
            } else {
                for (int c : forests[target].path_between(fu, fv))
                    if (!labeled[c]) {
                        labeled[c] = 1;
                        pred[c] = f;
                        q.emplace(c, 1 - target);
                    }
            }
        }
    }

    if (forests[0].size() != n - 1 || forests[1].size() != n - 1) return std::nullopt;

    SpanningTreePair pair;
    pair.root = 0;
    pair.parent1.assign(n, -1);
    pair.parent2.assign(n, -1);
    pair.parent_edge1.assign(n, -1);
    pair.parent_edge2.assign(n, -1);
    pair.depth1.assign(n, -1);
    pair.depth2.assign(n, -1);
    for (int e = 0; e < m; ++e) {
        if (home[e] == 0) pair.t1_edges.push_back(e);
        if (home[e] == 1) pair.t2_edges.push_back(e);
    }
    for (int tree = 0; tree < 2; ++tree) {
        auto& depth = tree == 0 ? pair.depth1 : pair.depth2;
        auto& parent = tree == 0 ? pair.parent1 : pair.parent2;
        auto& parent_edge = tree == 0 ? pair.parent_edge1 : pair.parent_edge2;
        std::queue<int> q;
        q.push(0);
        depth[0] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& a : g.neighbors(u))
                if (home[a.edge] == tree && depth[a.to] < 0) {
                    depth[a.to] = depth[u] + 1;
                    parent[a.to] = u;
                    parent_edge[a.to] = a.edge;
                    q.push(a.to);
                }
        }
        if (std::count(depth.begin(), depth.end(), -1) > 0) return std::nullopt;
    }
    return pair;
}

bool validate_tree_pair(const Graph& g, const SpanningTreePair& pair) {
    int n = g.vertex_count();
    if (static_cast<int>(pair.t1_edges.size()) != n - 1) return false;
    if (static_cast<int>(pair.t2_edges.size()) != n - 1) return false;
    std::set<int> s1(pair.t1_edges.begin(), pair.t1_edges.end());
    std::set<int> s2(pair.t2_edges.begin(), pair.t2_edges.end());
    if (s1.size() != pair.t1_edges.size() || s2.size() != pair.t2_edges.size()) return false;
    for (int e : s1)
        if (s2.count(e)) return false;
    for (int tree = 0; tree < 2; ++tree) {
        const auto& depth = tree == 0 ? pair.depth1 : pair.depth2;
        const auto& parent = tree == 0 ? pair.parent1 : pair.parent2;
        const auto& parent_edge = tree == 0 ? pair.parent_edge1 : pair.parent_edge2;
        const auto& edges = tree == 0 ? s1 : s2;
        if (depth[pair.root] != 0 || parent[pair.root] != -1) return false;
        for (int v = 0; v < n; ++v) {
            if (v == pair.root) continue;
            if (parent[v] < 0 || depth[v] != depth[parent[v]] + 1) return false;
            int e = parent_edge[v];
            if (!edges.count(e)) return false;
            if (g.other_end(e, v) != parent[v]) return false;
        }
        // n-1 parent edges, all in the tree edge set, acyclic by depth law.
    }
    return true;
}

namespace {

std::vector<int> root_path(const std::vector<int>& parent, int v) {
    std::vector<int> path{v};
    while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);
    return path;  // v, ..., root
}

}  // namespace

std::vector<int> witness_path(const SpanningTreePair& pair, int u, int v) {
    assert(u != v);
    std::vector<int> up = root_path(pair.parent1, u);  // u .. root in T_1
    for (size_t i = 0; i < up.size(); ++i)
        if (up[i] == v) return std::vector<int>(up.begin(), up.begin() + i + 1);

    std::vector<int> down = root_path(pair.parent2, v);  // v .. root in T_2
    std::reverse(down.begin(), down.end());              // root .. v
    std::vector<char> on_up(pair.parent1.size(), 0);
    for (int w : up) on_up[w] = 1;
    size_t zi = 0;  // root is always common
    for (size_t i = 0; i < down.size(); ++i)
        if (on_up[down[i]]) zi = i;  // farthest from root along the T_2 path
    int z = down[zi];

    std::vector<int> path;
    for (int w : up) {
        path.push_back(w);
        if (w == z) break;
    }
    assert(path.back() == z);
    for (size_t i = zi + 1; i < down.size(); ++i) path.push_back(down[i]);

    // The splice point choice makes the halves meet only at z.
    std::set<int> uniq(path.begin(), path.end());
    assert(uniq.size() == path.size() && "witness path must be simple");
    return path;
}

TwoTreeResult two_tree_color(const Graph& g, const SequenceProperty& p) {
    if (!p.reversal_closed)
        throw PreconditionError("two_tree_color: property must be reversal-closed");
    auto pair = two_edge_disjoint_spanning_trees(g);
    if (!pair)
        throw PreconditionError("two_tree_color: no two edge-disjoint spanning trees");

    int m_p = p.alphabet_size;
    TwoTreeResult res;
    res.trees = std::move(*pair);
    res.coloring.k = 2 * m_p;
    res.coloring.color.assign(g.edge_count(), 1);

    ColorSequence seq1 = p.generate(res.trees.height1());
    ColorSequence seq2 = p.generate(res.trees.height2());
    // Edge layer = depth of the child endpoint - 1 (layer 0 touches the root).
    for (int e : res.trees.t1_edges) {
        auto [a, b] = g.edge(e);
        int layer = std::max(res.trees.depth1[a], res.trees.depth1[b]) - 1;
        res.coloring.color[e] = seq1[layer];
    }
    for (int e : res.trees.t2_edges) {
        auto [a, b] = g.edge(e);
        int layer = std::max(res.trees.depth2[a], res.trees.depth2[b]) - 1;
        res.coloring.color[e] = seq2[layer] + m_p;
    }
    return res;
}

WitnessCertificate build_witnesses(const Graph& g, const EdgeColoring& c,
                                   const SpanningTreePair& pair) {
    WitnessCertificate cert;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            WitnessCertificate::Witness w;
            w.u = u;
            w.v = v;
            w.path = witness_path(pair, u, v);
            for (size_t i = 0; i + 1 < w.path.size(); ++i) {
                int e = g.edge_between(w.path[i], w.path[i + 1]);
                assert(e >= 0);
                w.colors.push_back(c.color[e]);
            }
            cert.witnesses.push_back(std::move(w));
        }
    return cert;
}

}  // namespace spc
