#ifndef SPC_GENERATE_HPP
#define SPC_GENERATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spc/graph.hpp"

namespace spc {

struct GdParameters {
    int a = 3, b = 3;
    int d = 3;  // target girth floor
};

/// A graph together with named vertices (carried into file comments).
struct LabeledGraph {
    Graph graph;
    std::vector<std::pair<std::string, int>> labels;
};

// Three bridges x_i w_i plus six connecting paths: P_1, P_2 from w_1 to x_2,
// P_3, P_4 from w_2 to x_3, P_5, P_6 from w_3 to x_1; odd-indexed paths have
// length 3a+1, even-indexed length 3b. Requires a, b >= max(3, d/3).
LabeledGraph build_gd(const GdParameters& params);

// Subdivides every edge of a 2-connected base into a path of 3*factor edges,
// so every cycle length of the result is a sum of multiples of 3.
Graph build_mod3(const Graph& base, const std::vector<int>& factors);

// build_mod3 with per-edge factors drawn uniformly from 1..max_factor.
Graph build_mod3_random(const Graph& base, int max_factor, std::uint64_t seed);

// Random Hamiltonian cycle plus extra_edges distinct chords; 2-connected by
// construction and deterministic per seed.
Graph random_two_connected(int n, int extra_edges, std::uint64_t seed);

// random_two_connected followed by greedy minimalization.
Graph random_min_two_connected(int n, int extra_edges, std::uint64_t seed);

}  // namespace spc

#endif
