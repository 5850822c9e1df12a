#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <variant>

#include "json_report.hpp"
#include "unmixed/bipartite.hpp"
#include "unmixed/decide.hpp"
#include "unmixed/generate.hpp"
#include "unmixed/graph.hpp"
#include "unmixed/oracle.hpp"

namespace unmixed::cli {

namespace {

Graph load_graph(const std::string& path) {
    if (path == "-") return Graph::parse_edge_list(std::cin);
    std::ifstream file(path);
    if (!file) throw Error("cannot open '" + path + "'");
    return Graph::parse_edge_list(file);
}

void emit(const nlohmann::json& doc, bool pretty, std::ostream& out) {
    out << (pretty ? doc.dump(2) : doc.dump()) << '\n';
}

int verdict_exit_code(Verdict v) { return v == Verdict::Unmixed ? 0 : 1; }

}  // namespace

int run_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
    UnmixedReport report;
    try {
        report = decide_unmixed(load_graph(options.path));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (!options.quiet) emit(report_to_json(report), options.pretty, out);
    return verdict_exit_code(report.verdict);
}

int run_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err) {
    Graph g;
    std::vector<VertexSet> covers;
    try {
        g = load_graph(options.path);
        covers = oracle::enumerate_minimal_covers(g, options.max_n);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    nlohmann::json doc = oracle_to_json(g, covers, options.covers);
    emit(doc, options.pretty, out);
    return doc["verdict"] == "unmixed" ? 0 : 1;
}

int run_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
    std::string text;
    try {
        switch (options.kind) {
            case GenerateKind::Preorder: {
                auto generated = from_preorder(
                    random_preorder(options.relation_size, options.probability, options.seed));
                std::string head;
                for (std::size_t i = 0; i < generated.labeling.pair_count(); ++i)
                    head += "# pair " + generated.graph.name(generated.labeling.x[i]) + ' ' +
                            generated.graph.name(generated.labeling.y[i]) + '\n';
                text = head + generated.graph.to_edge_list();
                break;
            }
            case GenerateKind::Bipartite:
                text = random_bipartite(options.side1, options.side2, options.probability,
                                        options.seed)
                           .to_edge_list();
                break;
            case GenerateKind::Tree:
                text = random_tree(options.tree_size, options.seed).to_edge_list();
                break;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (options.out_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(options.out_path);
    if (!file) {
        err << "error: cannot write '" << options.out_path << "'\n";
        return 2;
    }
    file << text;
    return 0;
}

namespace {

struct CrosscheckTally {
    int oracle_checks = 0;
    int certificate_checks = 0;
    int konig_checks = 0;
    int ravindra_checks = 0;
    int tree_checks = 0;
    int mismatches = 0;
    std::optional<std::pair<std::string, Graph>> first_failure;  // check name, graph
};

void record_failure(CrosscheckTally& tally, const std::string& check, const Graph& g) {
    ++tally.mismatches;
    if (!tally.first_failure) tally.first_failure = {check, g};
}

// Runs every check applicable to g; oracle cap is guaranteed by construction.
void crosscheck_one(const Graph& g, std::size_t cap, bool is_tree, bool corrupt,
                    CrosscheckTally& tally) {
    UnmixedReport report = decide_unmixed(g);
    bool fast_unmixed = report.verdict == Verdict::Unmixed;
    if (corrupt) fast_unmixed = !fast_unmixed;

    ++tally.oracle_checks;
    auto definition = oracle::unmixed_by_definition(g, cap);
    if (fast_unmixed != definition.unmixed) record_failure(tally, "oracle-agreement", g);

    ++tally.certificate_checks;
    if (report.verdict == Verdict::Mixed) {
        if (!oracle::is_minimal_vertex_cover(report.graph, report.cover_small) ||
            !oracle::is_minimal_vertex_cover(report.graph, report.cover_large) ||
            report.cover_small.size() >= report.cover_large.size())
            record_failure(tally, "mixed-certificate", g);
    } else if (report.verdict == Verdict::Unmixed && report.graph.vertex_count() > 0) {
        if (check_condition_b(report.graph, *report.labeling).has_value())
            record_failure(tally, "unmixed-certificate", g);
    }

    const Graph& core = report.graph;
    if (core.vertex_count() > 0 && report.verdict != Verdict::NotBipartite) {
        auto colored = two_color(core);
        const auto& bp = std::get<Bipartition>(colored);
        Matching m = maximum_matching(core, bp);

        ++tally.konig_checks;
        std::size_t min_cover = core.vertex_count();
        for (const auto& c : oracle::enumerate_minimal_covers(core, cap))
            min_cover = std::min(min_cover, c.size());
        if (m.size() != min_cover) record_failure(tally, "konig-equality", g);

        if (2 * m.size() == core.vertex_count()) {
            ++tally.ravindra_checks;
            bool ravindra_ok = !check_ravindra(core, bp, m).has_value();
            if (ravindra_ok != (report.verdict == Verdict::Unmixed))
                record_failure(tally, "ravindra-agreement", g);
        }
    }

    if (is_tree && g.vertex_count() >= 3) {
        ++tally.tree_checks;
        if (check_tree_corollary(g) != (report.verdict == Verdict::Unmixed))
            record_failure(tally, "tree-corollary", g);
    }
}

}  // namespace

int run_crosscheck(const CrosscheckOptions& options, std::ostream& out, std::ostream& err) {
    if (options.count < 1 || options.max_n < 2 || options.max_n > 24) {
        err << "error: need --count >= 1 and 2 <= --max-n <= 24\n";
        return 2;
    }
    std::mt19937_64 rng(options.seed);
    CrosscheckTally tally;
    const int half = std::max(1, options.max_n / 2);
    const double probabilities[] = {0.2, 0.5, 0.8};

    for (int item = 0; item < options.count; ++item) {
        const std::uint64_t item_seed = rng();
        const bool corrupt = options.inject_fault && item == 0;
        switch (item % 3) {
            case 0: {
                Graph g = random_bipartite(1 + static_cast<int>(rng() % half),
                                           1 + static_cast<int>(rng() % half),
                                           probabilities[rng() % 3], item_seed);
                crosscheck_one(g, options.max_n, false, corrupt, tally);
                break;
            }
            case 1: {
                const int n = 3 + static_cast<int>(rng() % std::max(1, options.max_n - 2));
                crosscheck_one(random_tree(n, item_seed), options.max_n, true, corrupt, tally);
                break;
            }
            case 2: {
                const int g = 1 + static_cast<int>(rng() % std::min(4, half));
                crosscheck_one(from_preorder(random_preorder(g, 0.3, item_seed)).graph,
                               options.max_n, false, corrupt, tally);
                break;
            }
        }
    }

    nlohmann::json summary = {
        {"count", options.count},
        {"max_n", options.max_n},
        {"seed", options.seed},
        {"mismatches", tally.mismatches},
        {"checks",
         {{"oracle", tally.oracle_checks},
          {"certificates", tally.certificate_checks},
          {"konig", tally.konig_checks},
          {"ravindra", tally.ravindra_checks},
          {"tree_corollary", tally.tree_checks}}},
    };
    if (tally.first_failure) {
        const auto& [check, graph] = *tally.first_failure;
        std::ofstream dump(options.dump_path);
        if (dump) {
            dump << "# crosscheck mismatch: " << check << '\n' << graph.to_edge_list();
            summary["dump"] = options.dump_path;
        }
        err << "mismatch in check '" << check << "', offending graph dumped to "
            << options.dump_path << '\n';
    }
    out << summary.dump() << '\n';
    return tally.mismatches == 0 ? 0 : 1;
}

}  // namespace unmixed::cli
