#ifndef SPC_GRAPH_HPP
#define SPC_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spc {

// Thrown when an operation's structural precondition fails (e.g. a graph
// that must be 2-connected is not).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph with dense vertex ids 0..n-1 and edge ids 0..m-1.
class Graph {
public:
    struct Arc {
        int to;
        int edge;
    };

    Graph() = default;

    // Validates: no self-loops, no parallel edges, endpoints in range.
    static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const { return edges_[id]; }

    const std::vector<Arc>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Edge id joining u and v, or -1.
    int edge_between(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_between(u, v) >= 0; }

    // Endpoint of edge `id` other than v.
    int other_end(int id, int v) const {
        auto [a, b] = edges_[id];
        return a == v ? b : a;
    }

    bool operator==(const Graph& rhs) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<Arc>> adj_;
};

/// Total edge coloring with colors 1..k.
struct EdgeColoring {
    int k = 0;
    std::vector<int> color;  // indexed by edge id

    int max_color_used() const;
};

// Small named families used all over the tests.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

bool is_connected(const Graph& g);

// False for graphs with fewer than 3 vertices (a single edge does not count).
bool is_two_connected(const Graph& g);

// Max k such that g is k-connected; n-1 for complete graphs, 0 if disconnected.
// Computed via unit-capacity max-flow on a vertex-split network.
int vertex_connectivity(const Graph& g);

// Size of a global minimum edge cut; 0 if disconnected.
int edge_connectivity(const Graph& g);

// Spanning subgraph that is 2-connected and loses 2-connectivity on removal
// of any single edge. Edges are dropped in ascending edge-id order, so the
// result is deterministic. Throws PreconditionError if g is not 2-connected.
Graph minimally_two_connected_spanning(const Graph& g);

// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

// True iff the graph admits a proper 2-coloring of its vertices.
bool is_bipartite(const Graph& g);

}  // namespace spc

#endif
