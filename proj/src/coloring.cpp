#include "spc/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

namespace spc {

std::vector<std::vector<int>> OrientedOverlay::out_arcs() const {
    std::vector<std::vector<int>> out(vertex_count);
    for (size_t i = 0; i < arcs.size(); ++i) out[arcs[i].from].push_back(static_cast<int>(i));
    return out;
}

std::vector<std::vector<int>> OrientedOverlay::in_arcs() const {
    std::vector<std::vector<int>> in(vertex_count);
    for (size_t i = 0; i < arcs.size(); ++i) in[arcs[i].to].push_back(static_cast<int>(i));
    return in;
}

namespace {

// Incremental overlay builder shared by the two constructions. Arc colors
// are written straight into the edge coloring of the host graph.
class OverlayBuilder {
public:
    OverlayBuilder(const Graph& g, EdgeColoring& coloring)
        : g_(g), coloring_(coloring), out_adj_(g.vertex_count()) {
        d_.vertex_count = g.vertex_count();
        d_.out_color.assign(g.vertex_count(), 0);
        d_.in_color.assign(g.vertex_count(), 0);
        d_.in_overlay.assign(g.vertex_count(), 0);
    }

    // Adds the oriented arc u -> v with the given color; returns false when
    // the color clashes with an already-fixed in/out color at an endpoint.
    bool add_arc(int u, int v, int color, int ear, int pos) {
        int e = g_.edge_between(u, v);
        assert(e >= 0);
        d_.arcs.push_back({u, v, e, ear, pos});
        out_adj_[u].push_back(v);
        d_.in_overlay[u] = d_.in_overlay[v] = 1;
        coloring_.color[e] = color;
        bool ok = true;
        if (d_.out_color[u] == 0)
            d_.out_color[u] = color;
        else if (d_.out_color[u] != color)
            ok = false;
        if (d_.in_color[v] == 0)
            d_.in_color[v] = color;
        else if (d_.in_color[v] != color)
            ok = false;
        return ok;
    }

    int out_color(int v) const { return d_.out_color[v]; }
    int in_color(int v) const { return d_.in_color[v]; }

    // Length of some directed path from s to t in the current overlay.
    int directed_distance(int s, int t) const {
        std::vector<int> dist(d_.vertex_count, -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (u == t) return dist[t];
            for (int v : out_adj_[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        return -1;
    }

    OrientedOverlay take() { return std::move(d_); }

private:
    const Graph& g_;
    EdgeColoring& coloring_;
    OrientedOverlay d_;
    std::vector<std::vector<int>> out_adj_;
};

int canonical_next(int color) { return color % 3 + 1; }

// Cyclic sequence of length len over 1..max_colors in which every window of
// three consecutive positions (wrapping) is rainbow. Smallest-first
// backtracking, so the result is deterministic and lexicographically least.
std::vector<int> cyclic_strong_coloring(int len, int max_colors) {
    std::vector<int> c(len, 0);
    int i = 0;
    while (i >= 0 && i < len) {
        int start = c[i] + 1;
        c[i] = 0;
        for (int cand = start; cand <= max_colors; ++cand) {
            if (i >= 1 && c[i - 1] == cand) continue;
            if (i >= 2 && c[i - 2] == cand) continue;
            if (i == len - 2 && c[0] == cand) continue;
            if (i == len - 1 && (c[0] == cand || c[1] == cand)) continue;
            c[i] = cand;
            break;
        }
        i = c[i] ? i + 1 : i - 1;
    }
    if (i < 0) return {};
    return c;
}

}  // namespace

Mod3Result color_mod3(const Graph& g) {
    EarDecomposition ed = open_ear_decomposition(g);

    Mod3Result res;
    res.coloring.k = 3;
    res.coloring.color.assign(g.edge_count(), 0);
    OverlayBuilder builder(g, res.coloring);

    for (size_t i = 0; i < ed.ears.size(); ++i) {
        const Ear& ear = ed.ears[i];
        int len = ear.length();
        if (len % 3 != 0)
            throw Mod3RejectionError(static_cast<int>(i),
                                     "color_mod3: ear length not divisible by 3");
        int first_color;
        if (i == 0) {
            first_color = 1;
        } else {
            int dist = builder.directed_distance(ear.s(), ear.t());
            assert(dist >= 0 && "overlay must stay strongly connected");
            if (dist % 3 != 0)
                throw Mod3RejectionError(static_cast<int>(i),
                                         "color_mod3: attachment path length not divisible by 3");
            first_color = builder.out_color(ear.s());
            assert(first_color > 0);
        }
        int color = first_color;
        for (int j = 0; j < len; ++j) {
            if (!builder.add_arc(ear.vertices[j], ear.vertices[j + 1], color,
                                 static_cast<int>(i), j))
                throw Mod3RejectionError(static_cast<int>(i),
                                         "color_mod3: color clash at ear attachment");
            color = canonical_next(color);
        }
    }
    res.overlay = builder.take();
    res.decomposition = std::move(ed);
    return res;
}

Spc5Result color_spc5(const Graph& g) {
    if (!is_two_connected(g))
        throw PreconditionError("color_spc5: input not 2-connected");

    Spc5Result res;
    res.spanning = minimally_two_connected_spanning(g);
    res.decomposition = longest_first_ear_decomposition(res.spanning);
    const auto& ears = res.decomposition.ears;

    // Last ear with at least three edges; everything after is a 2-edge ear
    // (minimality rules out 1-edge ears).
    size_t overlay_end = 0;
    for (size_t i = 0; i < ears.size(); ++i)
        if (ears[i].length() >= 3) overlay_end = i;
    for (size_t i = overlay_end + 1; i < ears.size(); ++i)
        assert(ears[i].length() == 2);

    res.coloring.color.assign(g.edge_count(), 1);  // edges outside H stay color 1
    OverlayBuilder builder(g, res.coloring);

    // Base case: the longest cycle, every 3-window rainbow (wrapping).
    {
        const Ear& cyc = ears[0];
        std::vector<int> base = cyclic_strong_coloring(cyc.length(), 5);
        assert(!base.empty() && "5 colors always suffice on a cycle");
        for (int j = 0; j < cyc.length(); ++j) {
            bool ok = builder.add_arc(cyc.vertices[j], cyc.vertices[j + 1], base[j], 0, j);
            assert(ok);
            (void)ok;
        }
    }

    for (size_t i = 1; i <= overlay_end; ++i) {
        const Ear& ear = ears[i];
        int p = ear.length();
        assert(p >= 3);
        // Colors along P'_i: slot 0 is the incoming arc w->s_i, slots 1..p the
        // ear arcs, slot p+1 the outgoing arc t_i->x. In/out colors at s_i and
        // t_i are uniform by invariants (i)-(ii), so any in-neighbor w and
        // out-neighbor x give the same constraints.
        std::vector<int> c(p + 2, 0);
        c[0] = builder.in_color(ear.s());
        c[1] = builder.out_color(ear.s());      // rule (a)
        c[p] = builder.in_color(ear.t());       // rule (b)
        c[p + 1] = builder.out_color(ear.t());
        assert(c[0] && c[1] && c[p] && c[p + 1]);
        for (int j = 2; j <= p - 1; ++j) {
            // rule (c): avoid the two preceding and any fixed of the two
            // following slots; at most 4 forbidden, so 5 colors suffice.
            auto forbidden = [&](int cand) {
                if (c[j - 1] == cand || c[j - 2] == cand) return true;
                if (j + 1 >= p && c[j + 1] == cand) return true;
                if (j + 2 >= p && c[j + 2] == cand) return true;
                return false;
            };
            for (int cand = 1; cand <= 5; ++cand)
                if (!forbidden(cand)) {
                    c[j] = cand;
                    break;
                }
            assert(c[j] > 0);
        }
        for (int j = 0; j < p; ++j) {
            bool ok = builder.add_arc(ear.vertices[j], ear.vertices[j + 1], c[j + 1],
                                      static_cast<int>(i), j);
            assert(ok && "rules (a)-(c) keep endpoint colors consistent");
            (void)ok;
        }
    }

    res.overlay = builder.take();

    // Orient the remaining 2-edge ears and extend the coloring over them.
    auto is_internal_of_3ear = [&](const OrientedOverlay::OverlayArc& a) {
        return a.ear >= 1 && a.pos == 1 && ears[a.ear].length() == 3;
    };
    auto in_arcs = res.overlay.in_arcs();
    auto out_arcs = res.overlay.out_arcs();
    auto orientation_ok = [&](int sp, int tp) {
        for (int ai : in_arcs[sp])
            if (is_internal_of_3ear(res.overlay.arcs[ai])) return false;
        for (int ai : out_arcs[tp])
            if (is_internal_of_3ear(res.overlay.arcs[ai])) return false;
        return true;
    };
    for (size_t i = overlay_end + 1; i < ears.size(); ++i) {
        const Ear& ear = ears[i];
        int s = ear.s(), t = ear.t(), v = ear.vertices[1];
        int sp = s, tp = t;
        if (!orientation_ok(sp, tp)) {
            std::swap(sp, tp);
            assert(orientation_ok(sp, tp) && "claims guarantee an admissible orientation");
        }
        res.short_ears.entries.push_back({static_cast<int>(i), sp, tp});
        res.coloring.color[g.edge_between(sp, v)] = res.overlay.out_color[sp];
        res.coloring.color[g.edge_between(v, tp)] = res.overlay.in_color[tp];
    }

    res.coloring.k = res.coloring.max_color_used();
    return res;
}

OverlayReport check_overlay_invariants(const OrientedOverlay& d, const EdgeColoring& c,
                                       OverlayMode mode) {
    OverlayReport r;
    r.out_colors_uniform = r.in_colors_uniform = true;
    r.in_out_distinct = r.distance_two_ok = r.mod3_local_law = true;
    std::ostringstream detail;

    auto arc_color = [&](const OrientedOverlay::OverlayArc& a) { return c.color[a.edge]; };
    auto outs = d.out_arcs();
    auto ins = d.in_arcs();

    std::vector<int> out_col(d.vertex_count, 0), in_col(d.vertex_count, 0);
    for (int v = 0; v < d.vertex_count; ++v) {
        for (int ai : outs[v]) {
            int col = arc_color(d.arcs[ai]);
            if (out_col[v] == 0)
                out_col[v] = col;
            else if (out_col[v] != col) {
                r.out_colors_uniform = false;
                detail << "mixed out-colors at vertex " << v << "; ";
            }
        }
        for (int ai : ins[v]) {
            int col = arc_color(d.arcs[ai]);
            if (in_col[v] == 0)
                in_col[v] = col;
            else if (in_col[v] != col) {
                r.in_colors_uniform = false;
                detail << "mixed in-colors at vertex " << v << "; ";
            }
        }
        if (d.in_overlay[v] && in_col[v] && out_col[v]) {
            if (mode == OverlayMode::Spc5 && in_col[v] == out_col[v]) {
                r.in_out_distinct = false;
                detail << "in-color equals out-color at vertex " << v << "; ";
            }
            if (mode == OverlayMode::Mod3 && out_col[v] != in_col[v] % 3 + 1) {
                r.mod3_local_law = false;
                detail << "mod-3 law broken at vertex " << v << "; ";
            }
        }
    }

    if (mode == OverlayMode::Spc5) {
        // Arc lengths per ear, for the 3-edge-ear carve-out.
        std::vector<int> ear_len;
        for (const auto& a : d.arcs) {
            if (a.ear >= static_cast<int>(ear_len.size())) ear_len.resize(a.ear + 1, 0);
            ear_len[a.ear] += 1;
        }
        for (const auto& a : d.arcs) {
            bool carved_out = a.ear >= 1 && ear_len[a.ear] == 3 && a.pos == 1;
            if (carved_out) continue;
            for (int xi : ins[a.from])
                for (int yi : outs[a.to])
                    if (arc_color(d.arcs[xi]) == arc_color(d.arcs[yi])) {
                        r.distance_two_ok = false;
                        detail << "distance-2 clash around arc " << a.from << "->" << a.to
                               << "; ";
                    }
        }
    }

    // Strong connectivity: forward and backward reachability from one vertex.
    {
        int start = -1;
        for (int v = 0; v < d.vertex_count; ++v)
            if (d.in_overlay[v]) {
                start = v;
                break;
            }
        auto reach = [&](bool forward) {
            std::vector<char> seen(d.vertex_count, 0);
            std::queue<int> q;
            q.push(start);
            seen[start] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int ai : forward ? outs[u] : ins[u]) {
                    int w = forward ? d.arcs[ai].to : d.arcs[ai].from;
                    if (!seen[w]) {
                        seen[w] = 1;
                        q.push(w);
                    }
                }
            }
            return seen;
        };
        r.strongly_connected = start >= 0;
        if (start >= 0) {
            auto fwd = reach(true);
            auto bwd = reach(false);
            for (int v = 0; v < d.vertex_count; ++v)
                if (d.in_overlay[v] && (!fwd[v] || !bwd[v])) {
                    r.strongly_connected = false;
                    detail << "vertex " << v << " breaks strong connectivity; ";
                }
        }
    }

    r.detail = detail.str();
    return r;
}

}  // namespace spc
