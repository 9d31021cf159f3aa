#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "spc/ear.hpp"
#include "spc/generate.hpp"

using namespace spc;
using namespace spc::test;

TEST_CASE("open ear decomposition covers and validates") {
    for (const Graph& g : {complete_graph(4), petersen(), octahedron(),
                           ten_cycle_with_ears(), twelve_cycle_with_ears(),
                           random_two_connected(15, 8, 11)}) {
        auto ed = open_ear_decomposition(g);
        CHECK(validate_ear_decomposition(ed).empty());
        CHECK(static_cast<int>(ed.ears.size()) == g.edge_count() - g.vertex_count() + 1);
        CHECK(ed.ears.front().is_cycle);
        for (size_t i = 1; i < ed.ears.size(); ++i) CHECK_FALSE(ed.ears[i].is_cycle);
    }
    CHECK_THROWS_AS(open_ear_decomposition(path_graph(4)), PreconditionError);
    CHECK_THROWS_AS(open_ear_decomposition(Graph::from_edges(
                        5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})),
                    PreconditionError);
}

TEST_CASE("longest-first decomposition of the 10-cycle fixture") {
    auto ed = longest_first_ear_decomposition(ten_cycle_with_ears());
    CHECK(validate_ear_decomposition(ed).empty());
    REQUIRE(ed.ears.size() == 4);
    CHECK(ed.ears[0].length() == 10);
    CHECK(ed.ears[1].length() == 4);
    CHECK(ed.ears[2].length() == 3);
    CHECK(ed.ears[3].length() == 2);
    auto rep = validate_structural_claims(ed);
    CAPTURE(rep.detail);
    CHECK(rep.all_ok());
}

TEST_CASE("longest-first rejects non-minimal input") {
    CHECK_THROWS_AS(longest_first_ear_decomposition(complete_graph(4)), PreconditionError);
    CHECK_THROWS_AS(longest_first_ear_decomposition(octahedron()), PreconditionError);
}

TEST_CASE("longest-first decomposition of the 12-cycle fixture") {
    // the fixture's longest cycle detours through two attached paths
    auto ed = longest_first_ear_decomposition(twelve_cycle_with_ears());
    CHECK(validate_ear_decomposition(ed).empty());
    CHECK(ed.ears[0].length() == 15);
    auto rep = validate_structural_claims(ed);
    CAPTURE(rep.detail);
    CHECK(rep.all_ok());
    for (size_t i = 1; i < ed.ears.size(); ++i)
        CHECK(ed.ears[i - 1].length() >= ed.ears[i].length());
}

TEST_CASE("cycles decompose into a single ear") {
    auto ed = longest_first_ear_decomposition(cycle_graph(7));
    REQUIRE(ed.ears.size() == 1);
    CHECK(ed.ears[0].length() == 7);
    CHECK(ed.ears[0].is_cycle);
    CHECK(validate_structural_claims(ed).all_ok());
}

TEST_CASE("complete bipartite K_{2,3} gives lengths (4, 2)") {
    auto ed = longest_first_ear_decomposition(complete_bipartite_graph(2, 3));
    REQUIRE(ed.ears.size() == 2);
    CHECK(ed.ears[0].length() == 4);
    CHECK(ed.ears[1].length() == 2);
    CHECK(validate_structural_claims(ed).all_ok());
}

TEST_CASE("theta graph decomposes into a 6-cycle plus a 3-edge ear") {
    Graph theta = Graph::from_edges(
        8, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7}, {7, 1}});
    for (auto ed : {open_ear_decomposition(theta), longest_first_ear_decomposition(theta)}) {
        REQUIRE(ed.ears.size() == 2);
        CHECK(ed.ears[0].length() == 6);
        CHECK(ed.ears[1].length() == 3);
    }
}

TEST_CASE("claim diagnostics flag a shuffled decomposition") {
    auto ed = longest_first_ear_decomposition(ten_cycle_with_ears());
    REQUIRE(ed.ears.size() == 4);
    // ears 1 and 2 both attach straight to the cycle, so swapping them keeps
    // a valid open ear decomposition but breaks the length ordering
    std::swap(ed.ears[1], ed.ears[2]);
    CHECK(validate_ear_decomposition(ed).empty());
    auto rep = validate_structural_claims(ed);
    CHECK_FALSE(rep.lengths_non_increasing);
    CHECK_FALSE(rep.all_ok());
}

TEST_CASE("longest-first really picks a longest first ear") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        Graph g = random_min_two_connected(11, 5, seed);
        auto ed = longest_first_ear_decomposition(g);
        CHECK(validate_ear_decomposition(ed).empty());
        auto lengths = all_cycle_lengths(g);
        int longest_cycle = *std::max_element(lengths.begin(), lengths.end());
        CHECK(ed.ears[0].length() == longest_cycle);
        for (size_t i = 1; i < ed.ears.size(); ++i)
            CHECK(ed.ears[i - 1].length() >= ed.ears[i].length());
        auto rep = validate_structural_claims(ed);
        CAPTURE(seed);
        CAPTURE(rep.detail);
        CHECK(rep.all_ok());
    }
}

TEST_CASE("decomposition is deterministic") {
    Graph g = random_min_two_connected(14, 6, 5);
    auto a = longest_first_ear_decomposition(g);
    auto b = longest_first_ear_decomposition(g);
    REQUIRE(a.ears.size() == b.ears.size());
    for (size_t i = 0; i < a.ears.size(); ++i) CHECK(a.ears[i].vertices == b.ears[i].vertices);
}

TEST_CASE("every ear of a minimal graph has an internal vertex") {
    for (std::uint64_t seed : {7u, 8u, 9u}) {
        Graph g = random_min_two_connected(13, 7, seed);
        auto ed = longest_first_ear_decomposition(g);
        for (const auto& ear : ed.ears) CHECK(ear.internal_count() >= 1);
    }
}
