#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "spc/generate.hpp"
#include "spc/io.hpp"

using namespace spc;
using namespace spc::test;

TEST_CASE("graph round trip") {
    for (const Graph& g : {cycle_graph(5), complete_graph(5), petersen(),
                           random_two_connected(18, 9, 2)}) {
        std::stringstream ss;
        write_graph(ss, g);
        CHECK(read_graph(ss).graph == g);
    }
    auto gd = build_gd({3, 3, 3});
    std::stringstream ss;
    write_graph(ss, gd);
    auto back = read_graph(ss);
    CHECK(back.graph == gd.graph);
    CHECK(back.labels == gd.labels);
}

TEST_CASE("graph parse errors") {
    auto parse = [](const std::string& text) {
        std::istringstream is(text);
        return read_graph(is);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("p edge 3 1\ne 1 4\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 3 2\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 3 1\ne 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 3 2\ne 1 2\ne 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse("e 1 2\np edge 3 1\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 3 1\nq 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("c label a 9\np edge 3 1\ne 1 2\n"), ParseError);
    CHECK_NOTHROW(parse("c a comment\n\np edge 3 1\ne 1 2\n"));
}

TEST_CASE("coloring round trip") {
    Graph g = cycle_graph(6);
    EdgeColoring c{3, {1, 2, 3, 1, 2, 3}};
    std::stringstream ss;
    write_coloring(ss, g, c, "strong");
    std::string prop;
    EdgeColoring back = read_coloring(ss, g, &prop);
    CHECK(back.k == 3);
    CHECK(back.color == c.color);
    CHECK(prop == "strong");
}

TEST_CASE("coloring parse errors") {
    Graph g = cycle_graph(3);
    auto parse = [&](const std::string& text) {
        std::istringstream is(text);
        return read_coloring(is, g, nullptr);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("k 0 property strong\n"), ParseError);
    CHECK_THROWS_AS(parse("k 2 strong\n"), ParseError);
    CHECK_THROWS_AS(parse("k 2 property strong\ne 1 2 1\ne 2 3 2\n"), ParseError);  // missing edge
    CHECK_THROWS_AS(parse("k 2 property strong\ne 1 2 1\ne 2 3 2\ne 1 3 3\n"), ParseError);
    CHECK_THROWS_AS(parse("k 2 property strong\ne 1 2 1\ne 2 3 2\ne 1 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse("k 2 property strong\ne 1 4 1\n"), ParseError);
    CHECK_NOTHROW(parse("k 2 property strong\ne 1 2 1\ne 2 3 2\ne 1 3 2\n"));
}

TEST_CASE("witness and dot output") {
    WitnessCertificate cert;
    cert.witnesses.push_back({0, 2, {0, 1, 2}, {1, 2}});
    std::stringstream ss;
    write_witnesses(ss, cert);
    CHECK(ss.str() == "w 1 3 1 2 3\n");

    Graph g = cycle_graph(3);
    EdgeColoring c{2, {1, 2, 1}};
    std::stringstream dot;
    write_dot(dot, g, &c);
    std::string text = dot.str();
    CHECK(text.find("graph g {") != std::string::npos);
    CHECK(text.find("1 -- 2") != std::string::npos);
    CHECK(text.find("label=2") != std::string::npos);
    std::stringstream plain;
    write_dot(plain, g);
    CHECK(plain.str().find("label=") == std::string::npos);
}
