#ifndef SPC_IO_HPP
#define SPC_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "spc/generate.hpp"
#include "spc/graph.hpp"
#include "spc/trees.hpp"

namespace spc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// DIMACS-flavored text: `c` comment lines (labels as `c label <name> <v>`),
// one `p edge <n> <m>` header, then m lines `e <u> <v>`, 1-indexed.
void write_graph(std::ostream& os, const LabeledGraph& g);
void write_graph(std::ostream& os, const Graph& g);
LabeledGraph read_graph(std::istream& is);

// Header `k <K> property <name>`, then one `e <u> <v> <color>` line per edge.
void write_coloring(std::ostream& os, const Graph& g, const EdgeColoring& c,
                    const std::string& property_name);
// Edge order and endpoints must match g exactly.
EdgeColoring read_coloring(std::istream& is, const Graph& g, std::string* property_name = nullptr);

// One `w <u> <v> <v_0> ... <v_t>` line per witness, 1-indexed vertices.
void write_witnesses(std::ostream& os, const WitnessCertificate& w);

// Graphviz text; when a coloring is given, edges carry label and color hints.
void write_dot(std::ostream& os, const Graph& g, const EdgeColoring* c = nullptr);

}  // namespace spc

#endif
