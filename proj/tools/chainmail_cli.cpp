// chainmail: build complexes, compute homology, run the verification suites.
//
// Exit codes: 0 success / all cases pass, 1 some case failed, 2 usage,
// input or capacity error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chainmail/complex.hpp"
#include "chainmail/graph.hpp"
#include "chainmail/homology.hpp"
#include "chainmail/kernels.hpp"
#include "chainmail/maps.hpp"
#include "chainmail/poset.hpp"
#include "chainmail/strata.hpp"
#include "chainmail/verify.hpp"

namespace {

using namespace chainmail;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << text;
}

struct BuildArgs {
    std::string family;
    int t = -1;
    int k = -1;
    std::string lambda;
    std::string tree;
    std::string graph;
    std::string output;
};

SimplicialComplex build(const BuildArgs& a)
{
    auto need_t = [&] {
        if (a.t < 0)
            throw InputError("--t is required for family " + a.family);
        return a.t;
    };
    if (a.family == "delta-L")
        return delta_complex(double_directed_string(need_t()));
    if (a.family == "delta-lambda") {
        if (a.lambda.empty())
            throw InputError("--lambda is required for delta-lambda");
        return delta_lambda(Partition(parse_parts(a.lambda)));
    }
    if (a.family == "disconnecting") {
        if (a.k < 1)
            throw InputError("--k >= 1 is required for disconnecting");
        Tree T = a.tree.empty() ? string_tree(need_t()) : as_tree(parse_graph(read_file(a.tree)));
        return disconnecting_complex(T, a.k);
    }
    if (a.family == "order-P")
        return order_complex(p_poset(need_t()));
    if (a.family == "independence") {
        if (a.graph.empty())
            throw InputError("--graph is required for independence");
        return independence_complex(as_undirected(parse_graph(read_file(a.graph))));
    }
    if (a.family == "delta-of-graph") {
        if (a.graph.empty())
            throw InputError("--graph is required for delta-of-graph");
        return delta_complex(as_directed(parse_graph(read_file(a.graph))));
    }
    throw InputError("unknown family '" + a.family + "'");
}

std::string f_vector_line(const SimplicialComplex& K)
{
    std::ostringstream out;
    out << "f-vector: (";
    auto f = f_vector(K);
    for (std::size_t i = 0; i < f.size(); ++i)
        out << (i ? ", " : "") << f[i];
    out << ")  chi: " << euler_characteristic(K) << '\n';
    return out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simplicial complexes of directed forests, strata and disconnecting complexes"};
    app.require_subcommand(1);

    BuildArgs b;
    auto* build_cmd = app.add_subcommand("build", "Build a complex and write it in the complex text format");
    build_cmd->add_option("--family", b.family,
                          "delta-L | delta-lambda | disconnecting | order-P | independence | delta-of-graph")
        ->required();
    build_cmd->add_option("--t", b.t, "string length t");
    build_cmd->add_option("--k", b.k, "k for disconnecting complexes");
    build_cmd->add_option("--lambda", b.lambda, "partition as comma separated parts, e.g. 3,1,1");
    build_cmd->add_option("--tree", b.tree, "tree file (graph text format, undirected)");
    build_cmd->add_option("--graph", b.graph, "graph file (graph text format)");
    build_cmd->add_option("-o,--output", b.output, "output file (default stdout)");

    std::string homology_input;
    auto* hom_cmd = app.add_subcommand("homology", "Reduced integral homology of a complex file as JSON");
    hom_cmd->add_option("complex", homology_input, "complex file")->required();

    std::string suite;
    SuiteOptions opt;
    std::string report_path;
    bool timing = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
    verify_cmd->add_option("suite", suite, "prop13 | prop15 | eq21 | thm32 | sec4-string | descriptions")
        ->required();
    verify_cmd->add_option("--max-t", opt.max_t, "largest t")->capture_default_str();
    verify_cmd->add_option("--max-k", opt.max_k, "largest k")->capture_default_str();
    verify_cmd->add_option("--all-trees-up-to", opt.max_tree_vertices, "tree size bound for thm32")
        ->capture_default_str();
    verify_cmd->add_option("--random-trees", opt.random_trees, "extra random labeled trees for thm32");
    verify_cmd->add_option("--random-size", opt.random_tree_vertices, "vertices of each random tree");
    verify_cmd->add_option("--seed", opt.seed, "seed for random trees")->capture_default_str();
    verify_cmd->add_option("-o,--output", report_path, "report file (default stdout)");
    verify_cmd->add_flag("--timing", timing, "include wall time in the report");

    std::string quillen_tree;
    auto* quillen_cmd = app.add_subcommand("quillen", "Check φ for one tree and print the fiber report");
    quillen_cmd->add_option("--tree", quillen_tree, "tree file")->required();

    std::string realize_complex, realize_graph;
    auto* realize_cmd =
        app.add_subcommand("realize", "Search for a poset whose order complex is the given complex");
    realize_cmd->add_option("complex", realize_complex, "complex file");
    realize_cmd->add_option("--graph", realize_graph, "directed graph file; tests Δ(G) instead");

    app.add_subcommand("info", "Print the active SIMD kernel set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build_cmd) {
            SimplicialComplex K = build(b);
            write_output(b.output, to_text(K));
            (b.output.empty() ? std::cerr : std::cout) << f_vector_line(K);
            return 0;
        }
        if (*hom_cmd) {
            SimplicialComplex K = parse_complex(read_file(homology_input));
            std::cout << homology_json(reduced_homology(K)) << '\n';
            return 0;
        }
        if (*verify_cmd) {
            VerificationReport r = run_suite(suite, opt);
            write_output(report_path, r.to_json(timing));
            std::cerr << r.suite << ": " << r.passed() << "/" << r.cases.size()
                      << " cases pass (homology-verified)\n";
            return r.all_passed() ? 0 : 1;
        }
        if (*quillen_cmd) {
            Tree T = as_tree(parse_graph(read_file(quillen_tree)));
            PhiCheck c = check_phi(T);
            std::cout << quillen_json(T, c);
            return c.pass() ? 0 : 1;
        }
        if (*realize_cmd) {
            SimplicialComplex K;
            if (!realize_graph.empty())
                K = delta_complex(as_directed(parse_graph(read_file(realize_graph))));
            else if (!realize_complex.empty())
                K = parse_complex(read_file(realize_complex));
            else
                throw InputError("give a complex file or --graph");
            auto P = exists_realizing_poset(K);
            if (!P) {
                std::cout << "no realizing poset\n";
                return 1;
            }
            std::cout << to_text(*P);
            return 0;
        }
        std::cout << "kernels: " << kernels::isa_name(kernels::active_isa()) << '\n';
        return 0;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
