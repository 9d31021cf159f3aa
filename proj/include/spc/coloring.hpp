#ifndef SPC_COLORING_HPP
#define SPC_COLORING_HPP

#include <string>
#include <vector>

#include "spc/ear.hpp"
#include "spc/graph.hpp"

namespace spc {

/// Directed overlay built by orienting each processed ear from s_i to t_i.
/// Carries the per-vertex in/out colors that the inductive constructions
/// maintain.
struct OrientedOverlay {
    struct OverlayArc {
        int from = 0;
        int to = 0;
        int edge = -1;   // edge id in the colored graph
        int ear = 0;     // ear index in the decomposition
        int pos = 0;     // 0-based position along the ear
    };

    int vertex_count = 0;
    std::vector<OverlayArc> arcs;
    std::vector<int> out_color;   // per vertex, 0 = vertex not in overlay
    std::vector<int> in_color;
    std::vector<char> in_overlay;

    std::vector<std::vector<int>> out_arcs() const;  // arc indices per vertex
    std::vector<std::vector<int>> in_arcs() const;
};

/// Chosen orientation (s', t') for each 2-edge ear left outside the overlay.
struct ShortEarOrientation {
    struct Entry {
        int ear = 0;
        int s = 0;  // s'_i
        int t = 0;  // t'_i
    };
    std::vector<Entry> entries;
};

// Thrown by color_mod3 when construction detects a cycle-length residue that
// is not 0 mod 3; carries the offending ear index.
struct Mod3RejectionError : PreconditionError {
    int ear;
    Mod3RejectionError(int ear_index, const std::string& what)
        : PreconditionError(what), ear(ear_index) {}
};

struct Mod3Result {
    EdgeColoring coloring;  // k = 3
    OrientedOverlay overlay;
    EarDecomposition decomposition;
};

// Canonical 3-coloring for 2-connected graphs whose cycle lengths are all
// divisible by 3. Every directed path of the overlay follows the periodic
// pattern 1,2,3,1,2,3,...
Mod3Result color_mod3(const Graph& g);

struct Spc5Result {
    EdgeColoring coloring;  // k <= 5
    OrientedOverlay overlay;
    ShortEarOrientation short_ears;
    EarDecomposition decomposition;
    Graph spanning;  // the minimally 2-connected spanning subgraph actually colored
};

// 5-color strongly proper connected coloring of an arbitrary 2-connected
// graph: minimal spanning subgraph, longest-first ears, inductive coloring
// of the overlay, then orientation and extension over the 2-edge ears.
// Edges outside the spanning subgraph get color 1.
Spc5Result color_spc5(const Graph& g);

enum class OverlayMode { Mod3, Spc5 };

struct OverlayReport {
    bool out_colors_uniform = false;   // all arcs leaving v share one color
    bool in_colors_uniform = false;    // all arcs entering v share one color
    bool in_out_distinct = false;      // spc5: in-color differs from out-color
    bool distance_two_ok = false;      // spc5: C(xu) != C(vy) around each eligible arc uv
    bool mod3_local_law = false;       // mod3: out = in + 1 (mod 3)
    bool strongly_connected = false;
    std::string detail;

    bool all_ok(OverlayMode mode) const {
        bool shared = out_colors_uniform && in_colors_uniform && strongly_connected;
        if (mode == OverlayMode::Mod3) return shared && mod3_local_law;
        return shared && in_out_distinct && distance_two_ok;
    }
};

OverlayReport check_overlay_invariants(const OrientedOverlay& d, const EdgeColoring& c,
                                       OverlayMode mode);

}  // namespace spc

#endif
