#ifndef SPC_EAR_HPP
#define SPC_EAR_HPP

#include <string>
#include <vector>

#include "spc/graph.hpp"

namespace spc {

/// One ear: ordered vertex list with endpoints first/last. For the initial
/// cycle the list starts and ends at the same vertex and is_cycle is true.
struct Ear {
    std::vector<int> vertices;
    bool is_cycle = false;

    int s() const { return vertices.front(); }
    int t() const { return vertices.back(); }
    int length() const { return static_cast<int>(vertices.size()) - 1; }  // edge count
    int internal_count() const {
        return std::max(0, static_cast<int>(vertices.size()) - 2 - (is_cycle ? -1 : 0));
    }
};

struct EarDecomposition {
    Graph source;
    std::vector<Ear> ears;
};

// Any valid open ear decomposition (Schmidt chain decomposition over a DFS
// tree; deterministic). Throws PreconditionError if g is not 2-connected.
EarDecomposition open_ear_decomposition(const Graph& g);

// Open ear decomposition in which the first ear is a longest cycle and each
// later ear is a longest path attachable to the current partial graph.
// Ties break to the lexicographically smallest vertex sequence. Exhaustive
// search; desk scale only. Requires h minimally 2-connected.
EarDecomposition longest_first_ear_decomposition(const Graph& h);

// Checks the type invariants: edges partitioned, first ear a cycle, later
// ears meet predecessors exactly in their endpoints. Returns a diagnostic
// message, empty when valid.
std::string validate_ear_decomposition(const EarDecomposition& ed);

/// Structural diagnostics for longest-first decompositions of minimally
/// 2-connected graphs.
struct ClaimReport {
    bool lengths_non_increasing = false;      // ears ordered longest first
    bool endpoints_not_adjacent = false;      // s_i, t_i non-adjacent in H_{i-1}
    bool equal_short_ears_detached = false;   // 2/2 and 3/3 edge ear endpoint rule
    bool two_on_three_attachment = false;     // 2-edge ear on 3-edge ear rule
    std::string detail;

    bool all_ok() const {
        return lengths_non_increasing && endpoints_not_adjacent &&
               equal_short_ears_detached && two_on_three_attachment;
    }
};

ClaimReport validate_structural_claims(const EarDecomposition& ed);

}  // namespace spc

#endif
