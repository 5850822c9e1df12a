#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace unmixed::cli;

    CLI::App app{"unmixed - decides whether a bipartite graph has minimal vertex "
                 "covers all of one size, with machine-checkable certificates"};
    app.require_subcommand(1);
    int rc = 0;

    CheckOptions check_options;
    auto* check = app.add_subcommand(
        "check", "Decide a graph and print a JSON report with a certificate");
    check->add_option("path", check_options.path, "edge-list file, or - for stdin")->required();
    check->add_flag("--quiet", check_options.quiet, "suppress JSON, keep the exit code");
    check->add_flag("--pretty", check_options.pretty, "indent the JSON output");
    check->callback([&] { rc = run_check(check_options, std::cout, std::cerr); });

    OracleOptions oracle_options;
    auto* oracle = app.add_subcommand(
        "oracle", "Brute-force verdict by enumerating every minimal vertex cover");
    oracle->add_option("path", oracle_options.path, "edge-list file, or - for stdin")->required();
    oracle->add_flag("--covers", oracle_options.covers, "include the full cover list");
    oracle->add_flag("--pretty", oracle_options.pretty, "indent the JSON output");
    oracle->add_option("--max-n", oracle_options.max_n, "override the vertex-count cap");
    oracle->callback([&] { rc = run_oracle(oracle_options, std::cout, std::cerr); });

    GenerateOptions generate_options;
    auto* generate = app.add_subcommand("generate", "Emit a generated graph as an edge list");
    generate->require_subcommand(1);
    generate->fallthrough();
    generate->add_option("--seed", generate_options.seed, "random seed")->required();
    generate->add_option("--out", generate_options.out_path, "output file (default: stdout)");

    auto* preorder = generate->add_subcommand(
        "preorder", "unmixed graph from a random reflexive-transitive relation");
    preorder->add_option("g", generate_options.relation_size, "relation dimension")->required();
    preorder->add_option("p", generate_options.probability, "off-diagonal density")->required();
    preorder->callback([&] {
        generate_options.kind = GenerateKind::Preorder;
        rc = run_generate(generate_options, std::cout, std::cerr);
    });

    auto* bipartite = generate->add_subcommand("bipartite", "random bipartite graph");
    bipartite->add_option("n1", generate_options.side1, "first part size")->required();
    bipartite->add_option("n2", generate_options.side2, "second part size")->required();
    bipartite->add_option("p", generate_options.probability, "edge probability")->required();
    bipartite->callback([&] {
        generate_options.kind = GenerateKind::Bipartite;
        rc = run_generate(generate_options, std::cout, std::cerr);
    });

    auto* tree = generate->add_subcommand("tree", "uniform random labeled tree");
    tree->add_option("n", generate_options.tree_size, "vertex count")->required();
    tree->callback([&] {
        generate_options.kind = GenerateKind::Tree;
        rc = run_generate(generate_options, std::cout, std::cerr);
    });

    CrosscheckOptions crosscheck_options;
    auto* crosscheck = app.add_subcommand(
        "crosscheck", "Batch-verify the fast path against the oracle and cross-checks");
    crosscheck->add_option("--count", crosscheck_options.count, "number of random graphs")
        ->required();
    crosscheck->add_option("--max-n", crosscheck_options.max_n, "largest graph to generate")
        ->required();
    crosscheck->add_option("--seed", crosscheck_options.seed, "random seed")->required();
    crosscheck->add_option("--dump", crosscheck_options.dump_path,
                           "where to write the first offending graph");
    crosscheck->add_flag("--inject-fault", crosscheck_options.inject_fault)->group("");
    crosscheck->callback([&] { rc = run_crosscheck(crosscheck_options, std::cout, std::cerr); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad invocation is an input error
    }
    return rc;
}
