#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace gdesign;
using namespace gdesign::cli;

namespace {

void add_graph_options(CLI::App* cmd, GraphOptions& g)
{
    cmd->add_option("--cube", g.cube, "n-cube Q_n, n <= 20 (explicit up to 12)");
    cmd->add_option("--dist", g.dist, "distance cube Q_n(d): edges at distance 1..d")->default_val(1);
    cmd->add_option("--fixture", g.fixture,
                    "complete:N, complete_bipartite:M,N, truncated_tetrahedron, petersen, johnson:N,K,I");
    cmd->add_option("--graph", g.graph_file, "graph document with fields n and edges");
    cmd->add_option("--tolerance", g.tolerance, "eigenvalue grouping tolerance (floating path)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graphical designs: spectra, verification, search and table reproduction"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "table or structured")
        ->check(CLI::IsMember({"table", "structured"}))
        ->default_val("table");

    GraphOptions graph;
    DesignOptions design;
    std::optional<int> max_size;
    std::string target;

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, dimensions and tie-groups of L = AD^-1 - I");
    add_graph_options(spectrum, graph);

    auto* verify = app.add_subcommand("verify", "design report, extremality and stability of a vertex subset");
    add_graph_options(verify, graph);
    verify->add_option("--code", design.code, "hamming:N, lift:C, double_lift:C, project:C, dual:C, file:PATH");
    verify->add_option("--design", design.design, "comma separated vertices, or a file of them");

    auto* search = app.add_subcommand("search", "exhaustive minimum-efficacy search");
    add_graph_options(search, graph);
    search->add_option("--max-size", max_size, "largest subset size examined (default |V|)");

    auto* reproduce = app.add_subcommand("reproduce", "regenerate a reference table and compare");
    reproduce->add_option("target", target, "table1, table2, table3 or efficacies")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3", "efficacies"}));

    for (auto* cmd : {spectrum, verify, search})
        cmd->add_option("--format", format, "table or structured")
            ->check(CLI::IsMember({"table", "structured"}));
    reproduce->add_option("--format", format, "table or structured")->check(CLI::IsMember({"table", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Outcome out;
        if (*spectrum)
            out = cmd_spectrum(graph);
        else if (*verify)
            out = cmd_verify(graph, design);
        else if (*search)
            out = cmd_search(graph, max_size);
        else
            out = cmd_reproduce(target);
        std::cout << render(out, format == "structured" ? Format::Structured : Format::Table);
        return out.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
