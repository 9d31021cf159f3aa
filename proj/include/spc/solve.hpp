#ifndef SPC_SOLVE_HPP
#define SPC_SOLVE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "spc/graph.hpp"
#include "spc/trees.hpp"
#include "spc/words.hpp"

namespace spc {

struct VerificationResult {
    bool connected = false;
    WitnessCertificate witnesses;  // one per unordered pair, on success
    std::vector<std::pair<int, int>> failing_pairs;
};

// A simple u-v path whose color sequence satisfies p, or nullopt when no
// such path exists (exhaustive DFS over simple paths with prefix pruning).
std::optional<std::vector<int>> exists_valid_path(const Graph& g, const EdgeColoring& c,
                                                  int u, int v, const SequenceProperty& p);

// Runs the path search over all unordered vertex pairs.
VerificationResult verify_connected_coloring(const Graph& g, const EdgeColoring& c,
                                             const SequenceProperty& p);

// True iff every witness is a simple path of g whose recorded colors match
// the coloring edge by edge and whose sequence satisfies p.
bool verify_witness_set(const Graph& g, const EdgeColoring& c, const WitnessCertificate& w,
                        const SequenceProperty& p, std::string* why = nullptr);

// Least k <= kmax for which a p-connected coloring of g exists; colorings are
// enumerated in restricted-growth form so each coloring is visited once up to
// color permutation. Refuses graphs above the edge cap.
std::optional<int> exact_connection_number(const Graph& g, const SequenceProperty& p,
                                           int kmax, int edge_cap = 14);

// Simulated annealing over k-colorings; energy = number of failing pairs.
// Returns a fully verified coloring if one is reached within the move budget;
// a nullopt result is evidence of infeasibility, never proof.
std::optional<EdgeColoring> stochastic_search(const Graph& g, const SequenceProperty& p,
                                              int k, std::int64_t budget, std::uint64_t seed);

}  // namespace spc

#endif
