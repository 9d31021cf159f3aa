#include "spc/ear.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace spc {

namespace {

std::vector<std::vector<Graph::Arc>> sorted_adjacency(const Graph& g) {
    std::vector<std::vector<Graph::Arc>> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        adj[v] = g.neighbors(v);
        std::sort(adj[v].begin(), adj[v].end(),
                  [](const Graph::Arc& a, const Graph::Arc& b) { return a.to < b.to; });
    }
    return adj;
}

}  // namespace

EarDecomposition open_ear_decomposition(const Graph& g) {
    if (!is_two_connected(g))
        throw PreconditionError("open_ear_decomposition: input not 2-connected");

    int n = g.vertex_count();
    std::vector<int> disc(n, -1), parent(n, -1), parent_edge(n, -1), it(n, 0), order;
    // Back edges keyed by their ancestor endpoint, chain style.
    std::vector<std::vector<int>> back_to;  // descendant endpoints
    back_to.resize(n);
    order.reserve(n);

    std::vector<int> stack{0};
    disc[0] = 0;
    order.push_back(0);
    int timer = 1;
    while (!stack.empty()) {
        int u = stack.back();
        if (it[u] < g.degree(u)) {
            const auto& a = g.neighbors(u)[it[u]++];
            if (disc[a.to] < 0) {
                disc[a.to] = timer++;
                parent[a.to] = u;
                parent_edge[a.to] = a.edge;
                order.push_back(a.to);
                stack.push_back(a.to);
            } else if (a.edge != parent_edge[u] && disc[a.to] < disc[u]) {
                back_to[a.to].push_back(u);
            }
        } else {
            stack.pop_back();
        }
    }

    EarDecomposition ed;
    ed.source = g;
    std::vector<char> marked(n, 0);
    int covered_edges = 0;
    for (int v : order) {
        for (int w : back_to[v]) {
            Ear ear;
            if (ed.ears.empty()) {
                assert(v == 0);
                marked[v] = 1;
            }
            assert(marked[v] && "chain start must lie in earlier ears");
            ear.vertices.push_back(v);
            int cur = w;
            while (!marked[cur]) {
                marked[cur] = 1;
                ear.vertices.push_back(cur);
                cur = parent[cur];
            }
            ear.vertices.push_back(cur);
            ear.is_cycle = (cur == v);
            assert((ed.ears.empty() || !ear.is_cycle) && "closed ear in 2-connected input");
            // the chain is collected walking up the tree; flip the initial
            // cycle so it runs in root-outward order
            if (ear.is_cycle) std::reverse(ear.vertices.begin(), ear.vertices.end());
            covered_edges += ear.length();
            ed.ears.push_back(std::move(ear));
        }
    }
    assert(covered_edges == g.edge_count());
    return ed;
}

namespace {

// Exhaustive longest-cycle search with canonical form: minimum vertex first,
// direction with smaller second vertex. Neighbors are scanned in ascending
// id order, so the first cycle found of any given length is lexicographically
// smallest; we only ever replace on strictly greater length.
class LongestCycleSearch {
public:
    explicit LongestCycleSearch(const Graph& g) : g_(g), adj_(sorted_adjacency(g)) {}

    std::vector<int> run() {
        int n = g_.vertex_count();
        on_path_.assign(n, 0);
        for (int v0 = 0; v0 < n; ++v0) {
            v0_ = v0;
            allowed_left_ = 0;
            for (int v = v0 + 1; v < n; ++v) ++allowed_left_;
            path_ = {v0};
            on_path_[v0] = 1;
            extend();
            on_path_[v0] = 0;
        }
        return best_;
    }

private:
    void extend() {
        int edges = static_cast<int>(path_.size()) - 1;
        if (edges + allowed_left_ + 1 <= best_len_) return;
        int u = path_.back();
        for (const auto& a : adj_[u]) {
            int x = a.to;
            if (x == v0_ && edges >= 2) {
                if (path_[1] < path_.back() && edges + 1 > best_len_) {
                    best_ = path_;
                    best_.push_back(v0_);
                    best_len_ = edges + 1;
                }
            } else if (x > v0_ && !on_path_[x]) {
                on_path_[x] = 1;
                --allowed_left_;
                path_.push_back(x);
                extend();
                path_.pop_back();
                ++allowed_left_;
                on_path_[x] = 0;
            }
        }
    }

    const Graph& g_;
    std::vector<std::vector<Graph::Arc>> adj_;
    std::vector<char> on_path_;
    std::vector<int> path_, best_;
    int v0_ = 0, allowed_left_ = 0, best_len_ = 0;
};

// Longest attachable ear: endpoints in the used vertex set, interior outside
// it. Candidates are compared by (length, canonical vertex sequence).
class LongestEarSearch {
public:
    LongestEarSearch(const Graph& g, const std::vector<char>& used_vertex,
                     const std::vector<char>& used_edge)
        : g_(g), adj_(sorted_adjacency(g)), used_vertex_(used_vertex), used_edge_(used_edge) {}

    std::vector<int> run() {
        int n = g_.vertex_count();
        on_path_.assign(n, 0);
        free_left_ = 0;
        for (int v = 0; v < n; ++v)
            if (!used_vertex_[v]) ++free_left_;

        // Chord ears (no internal vertex).
        for (int e = 0; e < g_.edge_count(); ++e) {
            if (used_edge_[e]) continue;
            auto [u, v] = g_.edge(e);
            if (used_vertex_[u] && used_vertex_[v])
                offer({std::min(u, v), std::max(u, v)});
        }

        for (int s = 0; s < n; ++s) {
            if (!used_vertex_[s]) continue;
            path_ = {s};
            extend();
        }
        return best_;
    }

private:
    void offer(std::vector<int> seq) {
        std::vector<int> rev(seq.rbegin(), seq.rend());
        if (rev < seq) seq = std::move(rev);
        int len = static_cast<int>(seq.size()) - 1;
        if (len > best_len_ || (len == best_len_ && (best_.empty() || seq < best_))) {
            best_len_ = len;
            best_ = std::move(seq);
        }
    }

    void extend() {
        int edges = static_cast<int>(path_.size()) - 1;
        if (edges + free_left_ + 1 < best_len_) return;
        int u = path_.back();
        for (const auto& a : adj_[u]) {
            int x = a.to;
            if (!used_vertex_[x] && !on_path_[x]) {
                on_path_[x] = 1;
                --free_left_;
                path_.push_back(x);
                extend();
                path_.pop_back();
                ++free_left_;
                on_path_[x] = 0;
            } else if (used_vertex_[x] && edges >= 1 && x != path_.front()) {
                path_.push_back(x);
                offer(path_);
                path_.pop_back();
            }
        }
    }

    const Graph& g_;
    std::vector<std::vector<Graph::Arc>> adj_;
    const std::vector<char>& used_vertex_;
    const std::vector<char>& used_edge_;
    std::vector<char> on_path_;
    std::vector<int> path_, best_;
    int free_left_ = 0, best_len_ = 0;
};

bool is_minimally_two_connected(const Graph& g) {
    if (!is_two_connected(g)) return false;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<std::pair<int, int>> es;
        for (int f = 0; f < g.edge_count(); ++f)
            if (f != e) es.push_back(g.edge(f));
        if (is_two_connected(Graph::from_edges(g.vertex_count(), std::move(es))))
            return false;
    }
    return true;
}

}  // namespace

EarDecomposition longest_first_ear_decomposition(const Graph& h) {
    if (!is_minimally_two_connected(h))
        throw PreconditionError(
            "longest_first_ear_decomposition: input not minimally 2-connected");

    EarDecomposition ed;
    ed.source = h;
    std::vector<char> used_vertex(h.vertex_count(), 0), used_edge(h.edge_count(), 0);

    auto absorb = [&](const std::vector<int>& seq, bool cycle) {
        Ear ear;
        ear.vertices = seq;
        ear.is_cycle = cycle;
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            int e = h.edge_between(seq[i], seq[i + 1]);
            assert(e >= 0 && !used_edge[e]);
            used_edge[e] = 1;
        }
        for (int v : seq) used_vertex[v] = 1;
        ed.ears.push_back(std::move(ear));
    };

    absorb(LongestCycleSearch(h).run(), true);
    int remaining = h.edge_count() - ed.ears.back().length();
    while (remaining > 0) {
        std::vector<int> ear = LongestEarSearch(h, used_vertex, used_edge).run();
        assert(!ear.empty() && "2-connected graph must admit a next ear");
        remaining -= static_cast<int>(ear.size()) - 1;
        absorb(ear, false);
    }
    return ed;
}

std::string validate_ear_decomposition(const EarDecomposition& ed) {
    const Graph& g = ed.source;
    if (ed.ears.empty()) return "no ears";
    std::ostringstream err;
    std::vector<char> edge_seen(g.edge_count(), 0), vertex_seen(g.vertex_count(), 0);

    for (size_t i = 0; i < ed.ears.size(); ++i) {
        const Ear& ear = ed.ears[i];
        if (ear.length() < 1) return "ear with no edges";
        if (ear.is_cycle != (i == 0)) return "cycle flag misplaced";
        if (ear.is_cycle && ear.vertices.front() != ear.vertices.back())
            return "cycle ear does not close";
        if (!ear.is_cycle && ear.vertices.front() == ear.vertices.back())
            return "open ear with equal endpoints";

        for (size_t j = 0; j + 1 < ear.vertices.size(); ++j) {
            int e = g.edge_between(ear.vertices[j], ear.vertices[j + 1]);
            if (e < 0) return "ear uses a non-edge";
            if (edge_seen[e]) return "edge covered twice";
            edge_seen[e] = 1;
        }
        if (i > 0) {
            if (!vertex_seen[ear.s()] || !vertex_seen[ear.t()])
                return "ear endpoint outside earlier ears";
            for (size_t j = 1; j + 1 < ear.vertices.size(); ++j)
                if (vertex_seen[ear.vertices[j]]) return "ear interior touches earlier ears";
        }
        // Interior vertices distinct within the ear.
        std::set<int> uniq(ear.vertices.begin(), ear.vertices.end());
        size_t expect = ear.vertices.size() - (ear.is_cycle ? 1 : 0);
        if (uniq.size() != expect) return "repeated vertex inside ear";
        for (int v : ear.vertices) vertex_seen[v] = 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!edge_seen[e]) return "edge not covered by any ear";
    return {};
}

ClaimReport validate_structural_claims(const EarDecomposition& ed) {
    const Graph& g = ed.source;
    const auto& ears = ed.ears;
    ClaimReport r;
    r.lengths_non_increasing = true;
    r.endpoints_not_adjacent = true;
    r.equal_short_ears_detached = true;
    r.two_on_three_attachment = true;
    std::ostringstream detail;

    for (size_t i = 1; i < ears.size(); ++i)
        if (ears[i].length() > ears[i - 1].length()) {
            r.lengths_non_increasing = false;
            detail << "ear " << i << " longer than ear " << i - 1 << "; ";
            break;
        }

    // Edge sets of the prefixes H_i, built incrementally.
    std::vector<std::set<std::pair<int, int>>> prefix_edges(ears.size() + 1);
    for (size_t i = 0; i < ears.size(); ++i) {
        prefix_edges[i + 1] = prefix_edges[i];
        for (size_t j = 0; j + 1 < ears[i].vertices.size(); ++j) {
            auto [a, b] =
                std::minmax(ears[i].vertices[j], ears[i].vertices[j + 1]);
            prefix_edges[i + 1].insert({a, b});
        }
    }
    auto adjacent_in_prefix = [&](size_t i, int u, int v) {
        auto [a, b] = std::minmax(u, v);
        return prefix_edges[i].count({a, b}) > 0 && g.has_edge(u, v);
    };

    for (size_t i = 1; i < ears.size(); ++i)
        if (adjacent_in_prefix(i, ears[i].s(), ears[i].t())) {
            r.endpoints_not_adjacent = false;
            detail << "endpoints of ear " << i << " adjacent in earlier prefix; ";
            break;
        }

    auto internal_position = [](const Ear& ear, int v) -> int {
        for (size_t j = 1; j + 1 < ear.vertices.size(); ++j)
            if (ear.vertices[j] == v) return static_cast<int>(j);
        return -1;
    };

    for (size_t i = 1; i < ears.size() && r.equal_short_ears_detached; ++i) {
        int li = ears[i].length();
        if (li != 2 && li != 3) continue;
        for (size_t j = 1; j < i; ++j) {
            if (ears[j].length() != li) continue;
            if (internal_position(ears[j], ears[i].s()) >= 0 ||
                internal_position(ears[j], ears[i].t()) >= 0) {
                r.equal_short_ears_detached = false;
                detail << "endpoint of ear " << i << " internal to equal-length ear " << j
                       << "; ";
                break;
            }
        }
    }

    for (size_t i = 1; i < ears.size() && r.two_on_three_attachment; ++i) {
        if (ears[i].length() != 2) continue;
        for (size_t j = 1; j < i; ++j) {
            if (ears[j].length() != 3) continue;
            for (int flip = 0; flip < 2; ++flip) {
                int a = flip ? ears[i].t() : ears[i].s();
                int b = flip ? ears[i].s() : ears[i].t();
                int pos = internal_position(ears[j], a);
                if (pos < 0) continue;
                // b must be the endpoint of ear j at distance 2 from a on it.
                int required = pos == 1 ? ears[j].vertices[3] : ears[j].vertices[0];
                if (b != required || adjacent_in_prefix(j + 1, a, b)) {
                    r.two_on_three_attachment = false;
                    detail << "2-edge ear " << i << " badly attached to 3-edge ear " << j
                           << "; ";
                }
            }
        }
    }

    r.detail = detail.str();
    return r;
}

}  // namespace spc
