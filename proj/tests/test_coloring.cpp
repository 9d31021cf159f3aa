#include <doctest.h>

#include "helpers.hpp"
#include "spc/coloring.hpp"
#include "spc/generate.hpp"
#include "spc/solve.hpp"

using namespace spc;
using namespace spc::test;

TEST_CASE("mod-3 coloring of divisible cycles") {
    for (int n : {3, 6, 9, 12}) {
        auto res = color_mod3(cycle_graph(n));
        CHECK(res.coloring.k == 3);
        CHECK(res.coloring.max_color_used() == 3);
        auto ver = verify_connected_coloring(cycle_graph(n), res.coloring,
                                             strongly_proper_property());
        CHECK(ver.connected);
        auto rep = check_overlay_invariants(res.overlay, res.coloring, OverlayMode::Mod3);
        CAPTURE(rep.detail);
        CHECK(rep.all_ok(OverlayMode::Mod3));
    }
}

TEST_CASE("canonical colors on the easy instances") {
    auto c12 = color_mod3(cycle_graph(12)).coloring;
    CHECK(c12.color == std::vector<int>{1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3});
    auto c5 = color_spc5(cycle_graph(5)).coloring;
    CHECK(c5.color == std::vector<int>{1, 2, 3, 4, 5});
    auto c6 = color_spc5(cycle_graph(6)).coloring;
    CHECK(c6.color == std::vector<int>{1, 2, 3, 1, 2, 3});
}

TEST_CASE("mod-3 coloring of a cycle with three attached divisible ears") {
    Graph g = twelve_cycle_with_ears();  // all cycle lengths divisible by 3
    auto res = color_mod3(g);
    CHECK(res.coloring.max_color_used() == 3);
    CHECK(verify_connected_coloring(g, res.coloring, strongly_proper_property()).connected);
    auto rep = check_overlay_invariants(res.overlay, res.coloring, OverlayMode::Mod3);
    CAPTURE(rep.detail);
    CHECK(rep.all_ok(OverlayMode::Mod3));
}

TEST_CASE("mod-3 coloring rejects bad cycle lengths") {
    CHECK_THROWS_AS(color_mod3(complete_bipartite_graph(2, 3)), Mod3RejectionError);
    CHECK_THROWS_AS(color_mod3(cycle_graph(4)), Mod3RejectionError);
    CHECK_THROWS_AS(color_mod3(cycle_graph(7)), Mod3RejectionError);
    CHECK_THROWS_AS(color_mod3(complete_graph(4)), Mod3RejectionError);
    CHECK_THROWS_AS(color_mod3(path_graph(4)), PreconditionError);
}

TEST_CASE("mod-3 coloring of subdivided graphs, end to end") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        Graph base = seed % 2 ? complete_graph(4) : complete_bipartite_graph(2, 3);
        Graph g = build_mod3_random(base, 2, seed);
        auto res = color_mod3(g);
        CHECK(res.coloring.k == 3);
        auto ver = verify_connected_coloring(g, res.coloring, strongly_proper_property());
        CAPTURE(seed);
        CHECK(ver.connected);
        auto rep = check_overlay_invariants(res.overlay, res.coloring, OverlayMode::Mod3);
        CAPTURE(rep.detail);
        CHECK(rep.all_ok(OverlayMode::Mod3));
    }
}

TEST_CASE("mod-3 overlay law detects tampering") {
    Graph g = build_mod3(complete_graph(4), std::vector<int>(6, 1));
    auto res = color_mod3(g);
    res.coloring.color[0] = res.coloring.color[0] % 3 + 1;
    auto rep = check_overlay_invariants(res.overlay, res.coloring, OverlayMode::Mod3);
    CHECK_FALSE(rep.all_ok(OverlayMode::Mod3));
}

TEST_CASE("five-color construction on fixtures") {
    for (const Graph& g : {ten_cycle_with_ears(), twelve_cycle_with_ears(), cycle_graph(5),
                           cycle_graph(4), complete_bipartite_graph(2, 3)}) {
        auto res = color_spc5(g);
        CHECK(res.coloring.max_color_used() <= 5);
        CHECK(is_two_connected(res.spanning));
        auto ver = verify_connected_coloring(g, res.coloring, strongly_proper_property());
        CHECK(ver.connected);
        auto rep = check_overlay_invariants(res.overlay, res.coloring, OverlayMode::Spc5);
        CAPTURE(rep.detail);
        CHECK(rep.out_colors_uniform);
        CHECK(rep.in_colors_uniform);
        CHECK(rep.in_out_distinct);
        CHECK(rep.distance_two_ok);
        CHECK(rep.strongly_connected);
    }
    CHECK_THROWS_AS(color_spc5(path_graph(5)), PreconditionError);
}

TEST_CASE("edges dropped by minimalization get color 1") {
    Graph g = complete_graph(5);
    auto res = color_spc5(g);
    CHECK(res.coloring.max_color_used() <= 5);
    bool dropped_some = false;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (res.spanning.edge_between(u, v) < 0) {
            dropped_some = true;
            CHECK(res.coloring.color[e] == 1);
        }
    }
    CHECK(dropped_some);
    CHECK(verify_connected_coloring(g, res.coloring, strongly_proper_property()).connected);
}

TEST_CASE("five-color construction on random minimal graphs") {
    for (std::uint64_t seed : {10u, 11u, 12u, 13u, 14u, 15u}) {
        Graph g = random_min_two_connected(12 + static_cast<int>(seed % 5), 6, seed);
        auto res = color_spc5(g);
        CAPTURE(seed);
        CHECK(res.coloring.max_color_used() <= 5);
        CHECK(verify_connected_coloring(g, res.coloring, strongly_proper_property()).connected);
        auto rep = check_overlay_invariants(res.overlay, res.coloring, OverlayMode::Spc5);
        CAPTURE(rep.detail);
        CHECK(rep.all_ok(OverlayMode::Spc5));
        // short-ear bookkeeping: every 2-edge ear appears exactly once
        int two_edge_ears = 0;
        for (const auto& ear : res.decomposition.ears)
            if (!ear.is_cycle && ear.length() == 2) ++two_edge_ears;
        CHECK(static_cast<int>(res.short_ears.entries.size()) == two_edge_ears);
    }
}

TEST_CASE("overlay adjacency lists are consistent") {
    auto res = color_spc5(ten_cycle_with_ears());
    auto outs = res.overlay.out_arcs();
    auto ins = res.overlay.in_arcs();
    size_t arc_total = 0;
    for (int v = 0; v < res.overlay.vertex_count; ++v) {
        for (int ai : outs[v]) CHECK(res.overlay.arcs[ai].from == v);
        for (int ai : ins[v]) CHECK(res.overlay.arcs[ai].to == v);
        arc_total += outs[v].size();
    }
    CHECK(arc_total == res.overlay.arcs.size());
}
