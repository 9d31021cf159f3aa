#include "spc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace spc {

LabeledGraph build_gd(const GdParameters& params) {
    int floor_ab = std::max(3, (params.d + 2) / 3);
    if (params.a < floor_ab || params.b < floor_ab)
        throw PreconditionError("build_gd: a and b must be at least max(3, d/3)");

    // Terminals first: x_1, w_1, x_2, w_2, x_3, w_3 = vertices 0..5.
    LabeledGraph out;
    const char* names[6] = {"x1", "w1", "x2", "w2", "x3", "w3"};
    for (int i = 0; i < 6; ++i) out.labels.emplace_back(names[i], i);
    int next = 6;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i) edges.emplace_back(2 * i, 2 * i + 1);  // bridges x_i w_i

    auto add_path = [&](int from, int to, int length) {
        int prev = from;
        for (int j = 1; j < length; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, to);
    };
    int len_odd = 3 * params.a + 1, len_even = 3 * params.b;
    for (int i = 0; i < 3; ++i) {
        int w = 2 * i + 1;             // w_{i+1}
        int x = 2 * ((i + 1) % 3);     // x_{i+2 mod 3}
        add_path(w, x, len_odd);       // P_1, P_3, P_5
        add_path(w, x, len_even);      // P_2, P_4, P_6
    }
    out.graph = Graph::from_edges(next, edges);
    return out;
}

Graph build_mod3(const Graph& base, const std::vector<int>& factors) {
    if (!is_two_connected(base))
        throw PreconditionError("build_mod3: base graph must be 2-connected");
    if (static_cast<int>(factors.size()) != base.edge_count())
        throw PreconditionError("build_mod3: one factor per base edge required");
    for (int f : factors)
        if (f <= 0) throw PreconditionError("build_mod3: factors must be positive");

    int next = base.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < base.edge_count(); ++e) {
        auto [u, v] = base.edge(e);
        int length = 3 * factors[e];
        int prev = u;
        for (int j = 1; j < length; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph::from_edges(next, edges);
}

Graph build_mod3_random(const Graph& base, int max_factor, std::uint64_t seed) {
    if (max_factor <= 0) throw PreconditionError("build_mod3_random: max_factor must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, max_factor);
    std::vector<int> factors(base.edge_count());
    for (int& f : factors) f = pick(rng);
    return build_mod3(base, factors);
}

Graph random_two_connected(int n, int extra_edges, std::uint64_t seed) {
    if (n < 3) throw PreconditionError("random_two_connected: n must be at least 3");
    std::int64_t capacity = static_cast<std::int64_t>(n) * (n - 1) / 2 - n;
    if (extra_edges < 0 || extra_edges > capacity)
        throw PreconditionError("random_two_connected: chord count exceeds capacity");

    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::set<std::pair<int, int>> used;
    std::vector<std::pair<int, int>> edges;
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (!used.insert({u, v}).second) return false;
        edges.emplace_back(u, v);
        return true;
    };
    for (int i = 0; i < n; ++i) add(order[i], order[(i + 1) % n]);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int placed = 0;
    while (placed < extra_edges) {
        int u = pick(rng), v = pick(rng);
        if (u != v && add(u, v)) ++placed;
    }
    return Graph::from_edges(n, edges);
}

Graph random_min_two_connected(int n, int extra_edges, std::uint64_t seed) {
    return minimally_two_connected_spanning(random_two_connected(n, extra_edges, seed));
}

}  // namespace spc
