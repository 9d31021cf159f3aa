#ifndef SPC_TREES_HPP
#define SPC_TREES_HPP

#include <optional>
#include <vector>

#include "spc/graph.hpp"
#include "spc/words.hpp"

namespace spc {

/// Two edge-disjoint spanning trees rooted at a common root, with per-tree
/// parent pointers and depths.
struct SpanningTreePair {
    int root = 0;
    std::vector<int> t1_edges, t2_edges;
    std::vector<int> parent1, parent2;            // parent vertex, -1 at root
    std::vector<int> parent_edge1, parent_edge2;  // edge id toward parent
    std::vector<int> depth1, depth2;

    int height1() const;
    int height2() const;
};

// Matroid-union style augmentation (grow two forests, searching the exchange
// structure when an edge is blocked). Returns nullopt exactly when g has no
// two edge-disjoint spanning trees; exhaustion of the augmenting search is
// the negative certificate. Root is vertex 0.
std::optional<SpanningTreePair> two_edge_disjoint_spanning_trees(const Graph& g);

// Structural check used by tests: disjoint edge sets, both spanning and
// acyclic, depths consistent.
bool validate_tree_pair(const Graph& g, const SpanningTreePair& pair);

/// Explicit path plus color sequence for one ordered vertex pair.
struct WitnessCertificate {
    struct Witness {
        int u = 0, v = 0;
        std::vector<int> path;    // vertex ids, path.front() == u, back() == v
        std::vector<int> colors;  // per edge along the path
    };
    std::vector<Witness> witnesses;
};

struct TwoTreeResult {
    EdgeColoring coloring;  // k = 2 * m(P)
    SpanningTreePair trees;
};

// Colors the depth layers of T_1 with a valid p-sequence over 1..m and the
// layers of T_2 with one over m+1..2m; all other edges get color 1. Requires
// p.reversal_closed and a tree pair to exist.
TwoTreeResult two_tree_color(const Graph& g, const SequenceProperty& p);

// The connecting path of the ordered pair (u, v): the T_1 sub-path when v
// lies on the T_1 path from u to the root, otherwise T_1 from u down to the
// splice vertex z followed by T_2 from z to v, where z is the common vertex
// of the two root paths farthest from the root along the T_2 path.
std::vector<int> witness_path(const SpanningTreePair& pair, int u, int v);

// Witnesses for all ordered pairs under the given coloring.
WitnessCertificate build_witnesses(const Graph& g, const EdgeColoring& c,
                                   const SpanningTreePair& pair);

}  // namespace spc

#endif
