#include "spc/io.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace spc {

namespace {

// Reads lines, skipping blanks; returns false at end of stream.
bool next_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (!blank) return true;
    }
    return false;
}

}  // namespace

void write_graph(std::ostream& os, const LabeledGraph& g) {
    for (const auto& [name, v] : g.labels) os << "c label " << name << ' ' << v + 1 << '\n';
    os << "p edge " << g.graph.vertex_count() << ' ' << g.graph.edge_count() << '\n';
    for (int e = 0; e < g.graph.edge_count(); ++e) {
        auto [u, v] = g.graph.edge(e);
        os << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
}

void write_graph(std::ostream& os, const Graph& g) { write_graph(os, LabeledGraph{g, {}}); }

LabeledGraph read_graph(std::istream& is) {
    LabeledGraph out;
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (next_line(is, line)) {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "c") {
            std::string word;
            if (ss >> word && word == "label") {
                std::string name;
                int v;
                if (!(ss >> name >> v)) throw ParseError("malformed label comment: " + line);
                out.labels.emplace_back(name, v - 1);
            }
        } else if (tag == "p") {
            std::string fmt;
            if (n >= 0 || !(ss >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                throw ParseError("malformed or duplicate problem line: " + line);
        } else if (tag == "e") {
            int u, v;
            if (n < 0) throw ParseError("edge line before problem line");
            if (!(ss >> u >> v) || u < 1 || u > n || v < 1 || v > n)
                throw ParseError("malformed edge line: " + line);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("unrecognized line: " + line);
        }
    }
    if (n < 0) throw ParseError("missing problem line");
    if (static_cast<int>(edges.size()) != m) throw ParseError("edge count does not match header");
    try {
        out.graph = Graph::from_edges(n, edges);
    } catch (const std::exception& ex) {
        throw ParseError(ex.what());
    }
    for (const auto& [name, v] : out.labels)
        if (v < 0 || v >= n) throw ParseError("label vertex out of range: " + name);
    return out;
}

void write_coloring(std::ostream& os, const Graph& g, const EdgeColoring& c,
                    const std::string& property_name) {
    os << "k " << c.k << " property " << property_name << '\n';
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        os << "e " << u + 1 << ' ' << v + 1 << ' ' << c.color[e] << '\n';
    }
}

EdgeColoring read_coloring(std::istream& is, const Graph& g, std::string* property_name) {
    std::string line;
    if (!next_line(is, line)) throw ParseError("empty coloring file");
    std::istringstream header(line);
    std::string tag, prop_kw, prop;
    int k;
    EdgeColoring c;
    if (!(header >> tag >> k >> prop_kw >> prop) || tag != "k" || prop_kw != "property" || k < 1)
        throw ParseError("malformed coloring header: " + line);
    c.k = k;
    if (property_name) *property_name = prop;
    c.color.assign(g.edge_count(), 0);
    std::vector<char> seen(g.edge_count(), 0);
    while (next_line(is, line)) {
        std::istringstream ss(line);
        int u, v, col;
        if (!(ss >> tag >> u >> v >> col) || tag != "e")
            throw ParseError("malformed coloring line: " + line);
        if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count())
            throw ParseError("coloring vertex out of range: " + line);
        int e = g.edge_between(u - 1, v - 1);
        if (e < 0) throw ParseError("coloring refers to a non-edge: " + line);
        if (seen[e]) throw ParseError("duplicate coloring line: " + line);
        if (col < 1 || col > k) throw ParseError("color out of range: " + line);
        seen[e] = 1;
        c.color[e] = col;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!seen[e]) throw ParseError("coloring misses an edge of the graph");
    return c;
}

void write_witnesses(std::ostream& os, const WitnessCertificate& w) {
    for (const auto& wit : w.witnesses) {
        os << "w " << wit.u + 1 << ' ' << wit.v + 1;
        for (int v : wit.path) os << ' ' << v + 1;
        os << '\n';
    }
}

void write_dot(std::ostream& os, const Graph& g, const EdgeColoring* c) {
    static const std::array<const char*, 6> palette = {"red",    "blue",   "forestgreen",
                                                       "orange", "purple", "brown"};
    os << "graph g {\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        os << "  " << u + 1 << " -- " << v + 1;
        if (c) {
            int col = c->color[e];
            os << " [label=" << col << ", color=" << palette[(col - 1) % palette.size()] << "]";
        }
        os << ";\n";
    }
    os << "}\n";
}

}  // namespace spc
