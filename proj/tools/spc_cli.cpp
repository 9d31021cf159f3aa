#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "spc/coloring.hpp"
#include "spc/ear.hpp"
#include "spc/generate.hpp"
#include "spc/graph.hpp"
#include "spc/io.hpp"
#include "spc/solve.hpp"
#include "spc/trees.hpp"
#include "spc/words.hpp"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;

spc::LabeledGraph load_graph(const std::string& path) {
    if (path == "-") return spc::read_graph(std::cin);
    std::ifstream f(path);
    if (!f) throw spc::ParseError("cannot open graph file: " + path);
    return spc::read_graph(f);
}

spc::EdgeColoring load_coloring(const std::string& path, const spc::Graph& g,
                                std::string* property_name) {
    if (path == "-") return spc::read_coloring(std::cin, g, property_name);
    std::ifstream f(path);
    if (!f) throw spc::ParseError("cannot open coloring file: " + path);
    return spc::read_coloring(f, g, property_name);
}

// Writes via the callback to the named file, or stdout for "-" / empty.
template <class Fn>
void with_output(const std::string& path, Fn fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream f(path);
    if (!f) throw spc::ParseError("cannot open output file: " + path);
    fn(f);
}

const spc::SequenceProperty& property_or_throw(const std::string& name) {
    const auto* p = spc::property_by_name(name);
    if (!p) throw spc::ParseError("unknown property: " + name);
    return *p;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"pattern-connected edge coloring toolkit"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->require_subcommand(1);
    int a = 3, b = 3, d = 3, n = 10, extra = 3, max_factor = 1;
    std::uint64_t seed = 1;
    std::string input = "-", output;

    auto* gd = gen->add_subcommand("gd", "lower-bound family");
    gd->add_option("--a", a);
    gd->add_option("--b", b);
    gd->add_option("--d", d);
    gd->callback([&] { spc::write_graph(std::cout, spc::build_gd({a, b, d})); });

    auto* mod3 = gen->add_subcommand("mod3", "subdivide a base so all cycles are divisible by 3");
    mod3->add_option("--input", input, "base graph file ('-' = stdin)");
    mod3->add_option("--max-factor", max_factor);
    mod3->add_option("--seed", seed);
    mod3->callback([&] {
        spc::write_graph(std::cout, spc::build_mod3_random(load_graph(input).graph, max_factor, seed));
    });

    auto* r2c = gen->add_subcommand("random2c", "random 2-connected graph");
    r2c->add_option("--n", n);
    r2c->add_option("--extra", extra, "chords beyond the Hamiltonian cycle");
    r2c->add_option("--seed", seed);
    r2c->callback([&] { spc::write_graph(std::cout, spc::random_two_connected(n, extra, seed)); });

    auto* rmin = gen->add_subcommand("randmin2c", "random minimally 2-connected graph");
    rmin->add_option("--n", n);
    rmin->add_option("--extra", extra);
    rmin->add_option("--seed", seed);
    rmin->callback(
        [&] { spc::write_graph(std::cout, spc::random_min_two_connected(n, extra, seed)); });

    // ---- ears ----
    auto* ears = app.add_subcommand("ears", "ear decomposition listing");
    bool longest_first = false, validate_claims = false;
    ears->add_option("--input", input);
    ears->add_flag("--longest-first", longest_first);
    ears->add_flag("--validate-claims", validate_claims);
    bool claims_failed = false;
    ears->callback([&] {
        spc::Graph g = load_graph(input).graph;
        auto ed = longest_first ? spc::longest_first_ear_decomposition(g)
                                : spc::open_ear_decomposition(g);
        for (size_t i = 0; i < ed.ears.size(); ++i) {
            std::cout << "ear " << i << " length " << ed.ears[i].length() << " :";
            for (int v : ed.ears[i].vertices) std::cout << ' ' << v + 1;
            std::cout << '\n';
        }
        if (validate_claims) {
            if (!longest_first)
                throw spc::PreconditionError("--validate-claims requires --longest-first");
            auto report = spc::validate_structural_claims(ed);
            std::cout << "claims " << (report.all_ok() ? "ok" : "FAILED") << '\n';
            if (!report.all_ok()) {
                std::cout << report.detail << '\n';
                claims_failed = true;
            }
        }
    });

    // ---- color ----
    auto* color = app.add_subcommand("color", "construct a connected coloring");
    std::string method = "spc5", prop_name = "strong", witness_output;
    color->add_option("--method", method)->check(CLI::IsMember({"spc5", "mod3", "twotree"}));
    color->add_option("--property", prop_name)->check(CLI::IsMember({"proper", "strong", "nonrep"}));
    color->add_option("--input", input);
    color->add_option("--output", output);
    color->add_option("--witness-output", witness_output, "twotree only");
    color->callback([&] {
        spc::Graph g = load_graph(input).graph;
        if (method == "spc5") {
            auto res = spc::color_spc5(g);
            with_output(output, [&](std::ostream& os) {
                spc::write_coloring(os, g, res.coloring, "strong");
            });
        } else if (method == "mod3") {
            auto res = spc::color_mod3(g);
            with_output(output, [&](std::ostream& os) {
                spc::write_coloring(os, g, res.coloring, "strong");
            });
        } else {
            const auto& p = property_or_throw(prop_name);
            auto res = spc::two_tree_color(g, p);
            with_output(output, [&](std::ostream& os) {
                spc::write_coloring(os, g, res.coloring, prop_name);
            });
            if (!witness_output.empty()) {
                auto cert = spc::build_witnesses(g, res.coloring, res.trees);
                with_output(witness_output,
                            [&](std::ostream& os) { spc::write_witnesses(os, cert); });
            }
        }
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check a coloring connects every pair");
    std::string coloring_path;
    prop_name.clear();
    verify->add_option("--input", input);
    verify->add_option("--coloring", coloring_path)->required();
    verify->add_option("--property", prop_name, "defaults to the coloring header");
    bool verify_failed = false;
    verify->callback([&] {
        spc::Graph g = load_graph(input).graph;
        std::string header_prop;
        auto c = load_coloring(coloring_path, g, &header_prop);
        const auto& p = property_or_throw(prop_name.empty() ? header_prop : prop_name);
        auto res = spc::verify_connected_coloring(g, c, p);
        if (res.connected) {
            std::cout << "connected with " << c.max_color_used() << " colors under " << p.name
                      << '\n';
        } else {
            std::cout << "NOT connected; failing pairs:";
            for (auto [u, v] : res.failing_pairs) std::cout << " (" << u + 1 << "," << v + 1 << ")";
            std::cout << '\n';
            verify_failed = true;
        }
    });

    // ---- exact ----
    auto* exact = app.add_subcommand("exact", "least k admitting a connected coloring");
    int kmax = 5, k = 3, edge_cap = 14;
    exact->add_option("--input", input);
    exact->add_option("--property", prop_name)->required();
    exact->add_option("--kmax", kmax);
    exact->add_option("--edge-cap", edge_cap);
    bool none_found = false;
    exact->callback([&] {
        spc::Graph g = load_graph(input).graph;
        auto res = spc::exact_connection_number(g, property_or_throw(prop_name), kmax, edge_cap);
        if (res)
            std::cout << *res << '\n';
        else {
            std::cout << "none\n";
            none_found = true;
        }
    });

    // ---- search ----
    auto* search = app.add_subcommand("search", "annealing search for a k-coloring");
    std::int64_t budget = 100000;
    search->add_option("--input", input);
    search->add_option("--property", prop_name)->required();
    search->add_option("--k", k);
    search->add_option("--budget", budget);
    search->add_option("--seed", seed);
    search->add_option("--output", output);
    search->callback([&] {
        spc::Graph g = load_graph(input).graph;
        const auto& p = property_or_throw(prop_name);
        auto res = spc::stochastic_search(g, p, k, budget, seed);
        if (res)
            with_output(output, [&](std::ostream& os) { spc::write_coloring(os, g, *res, p.name); });
        else {
            std::cout << "none\n";
            none_found = true;
        }
    });

    // ---- export-dot ----
    auto* dot = app.add_subcommand("export-dot", "Graphviz text");
    dot->add_option("--input", input);
    dot->add_option("--coloring", coloring_path);
    dot->callback([&] {
        spc::Graph g = load_graph(input).graph;
        if (coloring_path.empty()) {
            spc::write_dot(std::cout, g);
        } else {
            auto c = load_coloring(coloring_path, g, nullptr);
            spc::write_dot(std::cout, g, &c);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }
    if (verify_failed || none_found || claims_failed) return kExitNegative;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const spc::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const spc::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}
