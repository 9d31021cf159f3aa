#include "spc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace spc {

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    Graph g;
    g.n_ = vertex_count;
    g.adj_.resize(vertex_count);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("parallel edge");
        int id = static_cast<int>(g.edges_.size());
        g.edges_.emplace_back(u, v);
        g.adj_[u].push_back({v, id});
        g.adj_[v].push_back({u, id});
    }
    return g;
}

int Graph::edge_between(int u, int v) const {
    for (const Arc& a : adj_[u])
        if (a.to == v) return a.edge;
    return -1;
}

bool Graph::operator==(const Graph& rhs) const {
    if (n_ != rhs.n_ || edges_.size() != rhs.edges_.size()) return false;
    auto norm = [](const std::vector<std::pair<int, int>>& es) {
        std::vector<std::pair<int, int>> out;
        out.reserve(es.size());
        for (auto [u, v] : es) out.push_back(std::minmax(u, v));
        std::sort(out.begin(), out.end());
        return out;
    };
    return norm(edges_) == norm(rhs.edges_);
}

int EdgeColoring::max_color_used() const {
    int m = 0;
    for (int c : color) m = std::max(m, c);
    return m;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(es));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(es));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, std::move(es));
}

Graph complete_bipartite_graph(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::from_edges(a + b, std::move(es));
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const auto& a : g.neighbors(u))
            if (!seen[a.to]) {
                seen[a.to] = 1;
                ++count;
                q.push(a.to);
            }
    }
    return count == n;
}

namespace {

// Iterative DFS lowpoint computation; returns true if some articulation
// vertex exists (assumes g connected, n >= 3).
bool has_articulation_vertex(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), it(n, 0);
    int timer = 0;
    std::vector<int> stack;
    stack.push_back(0);
    disc[0] = low[0] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
        int u = stack.back();
        if (it[u] < g.degree(u)) {
            const auto& a = g.neighbors(u)[it[u]++];
            int v = a.to;
            if (disc[v] < 0) {
                parent[v] = u;
                disc[v] = low[v] = timer++;
                if (u == 0) ++root_children;
                stack.push_back(v);
            } else if (v != parent[u]) {
                low[u] = std::min(low[u], disc[v]);
            }
        } else {
            stack.pop_back();
            int p = parent[u];
            if (p >= 0) {
                low[p] = std::min(low[p], low[u]);
                if (p != 0 && low[u] >= disc[p]) return true;
            }
        }
    }
    return root_children > 1;
}

// Unit-ish capacity max-flow (BFS augmentation). Small graphs only.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : head_(n, -1) {}

    void add_edge(int u, int v, int cap) {
        arcs_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({u, head_[v], 0});
        head_[v] = static_cast<int>(arcs_.size()) - 1;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (true) {
            std::vector<int> pred_arc(head_.size(), -1);
            std::queue<int> q;
            q.push(s);
            pred_arc[s] = -2;
            while (!q.empty() && pred_arc[t] == -1) {
                int u = q.front();
                q.pop();
                for (int e = head_[u]; e >= 0; e = arcs_[e].next) {
                    if (arcs_[e].cap > 0 && pred_arc[arcs_[e].to] == -1) {
                        pred_arc[arcs_[e].to] = e;
                        q.push(arcs_[e].to);
                    }
                }
            }
            if (pred_arc[t] == -1) break;
            for (int v = t; v != s;) {
                int e = pred_arc[v];
                arcs_[e].cap -= 1;
                arcs_[e ^ 1].cap += 1;
                v = arcs_[e ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }

private:
    struct FlowArc {
        int to;
        int next;
        int cap;
    };
    std::vector<int> head_;
    std::vector<FlowArc> arcs_;
};

// Local vertex connectivity between non-adjacent u, v via vertex splitting:
// each vertex w becomes w_in -> w_out with capacity 1 (infinite for u, v).
int local_vertex_connectivity(const Graph& g, int u, int v) {
    int n = g.vertex_count();
    const int big = n + 1;
    FlowNetwork net(2 * n);
    auto in = [](int w) { return 2 * w; };
    auto out = [](int w) { return 2 * w + 1; };
    for (int w = 0; w < n; ++w)
        net.add_edge(in(w), out(w), (w == u || w == v) ? big : 1);
    for (auto [a, b] : g.edges()) {
        net.add_edge(out(a), in(b), big);
        net.add_edge(out(b), in(a), big);
    }
    return net.max_flow(out(u), in(v));
}

}  // namespace

bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_connected(g)) return false;
    return !has_articulation_vertex(g);
}

int vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return 0;
    if (!is_connected(g)) return 0;
    int best = n - 1;
    bool any_pair = false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) {
                any_pair = true;
                best = std::min(best, local_vertex_connectivity(g, u, v));
            }
    if (!any_pair) return n - 1;  // complete graph
    return best;
}

int edge_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return 0;
    if (!is_connected(g)) return 0;
    int best = g.edge_count();
    for (int v = 1; v < n; ++v) {
        FlowNetwork net(n);
        for (auto [a, b] : g.edges()) {
            net.add_edge(a, b, 1);
            net.add_edge(b, a, 1);
        }
        best = std::min(best, net.max_flow(0, v));
    }
    return best;
}

Graph minimally_two_connected_spanning(const Graph& g) {
    if (!is_two_connected(g))
        throw PreconditionError("minimally_two_connected_spanning: input not 2-connected");
    int m = g.edge_count();
    std::vector<char> keep(m, 1);
    auto build = [&](int skip) {
        std::vector<std::pair<int, int>> es;
        for (int e = 0; e < m; ++e)
            if (keep[e] && e != skip) es.push_back(g.edge(e));
        return Graph::from_edges(g.vertex_count(), std::move(es));
    };
    for (int e = 0; e < m; ++e)
        if (is_two_connected(build(e))) keep[e] = 0;
    return build(-1);
}

std::optional<int> girth(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), par_edge(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        par_edge[s] = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& a : g.neighbors(u)) {
                if (dist[a.to] < 0) {
                    dist[a.to] = dist[u] + 1;
                    par_edge[a.to] = a.edge;
                    q.push(a.to);
                } else if (a.edge != par_edge[u]) {
                    int cyc = dist[u] + dist[a.to] + 1;
                    if (best < 0 || cyc < best) best = cyc;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& a : g.neighbors(u)) {
                if (side[a.to] < 0) {
                    side[a.to] = 1 - side[u];
                    q.push(a.to);
                } else if (side[a.to] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace spc
