// Acceptance suite: runs the full battery of oracle-backed checks at desk
// scale and prints one pass/fail line per criterion. Exit code is the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "unmixed/bipartite.hpp"
#include "unmixed/decide.hpp"
#include "unmixed/generate.hpp"
#include "unmixed/graph.hpp"
#include "unmixed/oracle.hpp"

using namespace unmixed;
using namespace unmixed::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int number;
    bool pass;
    std::string detail;
};

std::vector<Criterion> results;

void record(int number, bool pass, const std::string& detail) {
    results.push_back({number, pass, detail});
    std::printf("criterion %2d [%s] %s\n", number, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

// ---------------------------------------------------------------------------
// Corpora for criteria 1, 2, 4 and 9.

std::vector<Graph> k33_subset_corpus() {
    std::vector<Graph> corpus;
    for (unsigned mask = 0; mask < 512; ++mask) {
        Graph::Builder b;
        for (int i = 0; i < 3; ++i) b.add_vertex("x" + std::to_string(i + 1));
        for (int j = 0; j < 3; ++j) b.add_vertex("y" + std::to_string(j + 1));
        int bit = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j, ++bit)
                if ((mask >> bit) & 1) b.add_edge(i, 3 + j);
        corpus.push_back(strip_isolated(b.build()).graph);
    }
    return corpus;
}

Graph random_corpus_graph(std::size_t index) {
    static const double probabilities[] = {0.2, 0.5, 0.8};
    const int n1 = 1 + static_cast<int>(index % 7);
    const int n2 = 1 + static_cast<int>((index / 7) % 7);
    const double p = probabilities[index % 3];
    return random_bipartite(n1, n2, p, 0xACCE0000 + index);
}

constexpr std::size_t kRandomCorpusSize = 10000;

struct CorpusAudit {
    long certificate_failures = 0;
    long konig_mismatches = 0;
};

// Certificate and König-equality checks shared by criteria 4 and 9.
void audit_graph(const Graph& g, CorpusAudit& audit) {
    UnmixedReport report = decide_unmixed(g);
    if (report.verdict == Verdict::Mixed) {
        if (!oracle::is_minimal_vertex_cover(report.graph, report.cover_small) ||
            !oracle::is_minimal_vertex_cover(report.graph, report.cover_large) ||
            report.cover_small.size() >= report.cover_large.size())
            ++audit.certificate_failures;
    } else {
        if (!report.labeling || check_condition_b(report.graph, *report.labeling).has_value())
            ++audit.certificate_failures;
    }

    const Graph& core = report.graph;
    if (core.vertex_count() > 0) {
        auto colored = two_color(core);
        Matching m = maximum_matching(core, std::get<Bipartition>(colored));
        std::size_t min_cover = core.vertex_count();
        for (const auto& c : oracle::enumerate_minimal_covers(core))
            min_cover = std::min(min_cover, c.size());
        if (m.size() != min_cover) ++audit.konig_mismatches;
    }
}

// ---------------------------------------------------------------------------

void criterion_1_and_later(CorpusAudit& audit_total) {
    auto corpus = k33_subset_corpus();
    auto start = Clock::now();
    long mismatches = 0;
    for (const Graph& g : corpus)
        if ((decide_unmixed(g).verdict == Verdict::Unmixed) !=
            oracle::unmixed_by_definition(g).unmixed)
            ++mismatches;
    double elapsed = seconds_since(start);

    std::ostringstream detail;
    detail << "oracle equivalence on all 512 K33 edge subsets: " << mismatches
           << " mismatches in " << elapsed << " s (limit 10 s)";
    record(1, mismatches == 0 && elapsed < 10.0, detail.str());

    for (const Graph& g : corpus) audit_graph(g, audit_total);
}

void criterion_2_and_later(CorpusAudit& audit_total) {
    auto start = Clock::now();
    long mismatches = 0;
    for (std::size_t i = 0; i < kRandomCorpusSize; ++i) {
        Graph g = random_corpus_graph(i);
        if ((decide_unmixed(g).verdict == Verdict::Unmixed) !=
            oracle::unmixed_by_definition(g).unmixed)
            ++mismatches;
    }
    double elapsed = seconds_since(start);

    std::ostringstream detail;
    detail << "oracle equivalence on " << kRandomCorpusSize
           << " random bipartite graphs (n1,n2 <= 7, p in {0.2,0.5,0.8}): " << mismatches
           << " mismatches in " << elapsed << " s (limit 120 s)";
    record(2, mismatches == 0 && elapsed < 120.0, detail.str());

    for (std::size_t i = 0; i < kRandomCorpusSize; ++i)
        audit_graph(random_corpus_graph(i), audit_total);
}

void criterion_3() {
    bool ok = true;
    std::ostringstream detail;

    auto k22 = decide_unmixed(complete_bipartite(2, 2));
    ok &= k22.verdict == Verdict::Unmixed && k22.labeling->pair_count() == 2;

    Graph c6 = cycle_graph(6);
    auto c6_report = decide_unmixed(c6);
    auto c6_oracle = oracle::unmixed_by_definition(c6);
    ok &= c6_report.verdict == Verdict::Mixed;
    ok &= c6_oracle.cover_sizes == std::vector<std::size_t>{3, 3, 4, 4, 4};
    ok &= c6_report.cover_small.size() == 3 && c6_report.cover_large.size() == 4;

    ok &= decide_unmixed(path_graph({"a", "b", "c", "d"})).verdict == Verdict::Unmixed;
    ok &= decide_unmixed(path_graph({"a", "b", "c", "d", "e", "f"})).verdict == Verdict::Mixed;

    auto star = decide_unmixed(star_graph(3));
    ok &= star.verdict == Verdict::Mixed && star.cover_small.size() == 1 &&
          star.cover_large.size() == 3;

    detail << "fixture verdicts: K22 unmixed g=2, C6 mixed {3,3,4,4,4} certificate (3,4), "
              "P4 unmixed, P6 mixed, K13 mixed (1,3)";
    record(3, ok, detail.str());
}

void criterion_4(const CorpusAudit& audit) {
    std::ostringstream detail;
    detail << "certificate soundness across criteria 1-2 corpora: " << audit.certificate_failures
           << " failures in " << (512 + kRandomCorpusSize) << " reports";
    record(4, audit.certificate_failures == 0, detail.str());
}

void criterion_5() {
    long discrepancies = 0;
    long graphs = 0;

    // 1000 preorder-generated unmixed graphs, relation dimension <= 8.
    for (std::size_t i = 0; i < 1000; ++i) {
        const int dim = 1 + static_cast<int>(i % 8);
        Graph g = from_preorder(random_preorder(dim, 0.05 + 0.05 * (i % 6), 0x5EED0000 + i)).graph;
        auto colored = two_color(g);
        const auto& bp = std::get<Bipartition>(colored);
        bool first_verdict = false;
        bool consistent = true;
        for (std::uint64_t run = 0; run < 10; ++run) {
            Matching m = maximum_matching(g, bp, run * 7919 + i);
            bool fails = check_condition_b(g, build_labeling(g, bp, m)).has_value();
            if (run == 0)
                first_verdict = fails;
            else
                consistent &= fails == first_verdict;
        }
        if (!consistent || first_verdict) ++discrepancies;  // preorder graphs must pass
        ++graphs;
    }

    // 1000 random bipartite mixed graphs that do possess perfect matchings.
    std::size_t attempt = 0;
    long accepted = 0;
    while (accepted < 1000 && attempt < 2000000) {
        const std::size_t i = attempt++;
        const int n = 2 + static_cast<int>(i % 6);
        Graph g = random_bipartite(n, n, 0.45 + 0.1 * (i % 3), 0x3A7C0000 + i);
        auto colored = two_color(g);
        auto* bp = std::get_if<Bipartition>(&colored);
        if (!bp || bp->side1.size() != bp->side2.size()) continue;
        Matching canonical = maximum_matching(g, *bp);
        if (2 * canonical.size() != g.vertex_count()) continue;
        if (!check_condition_b(g, build_labeling(g, *bp, canonical)).has_value()) continue;
        ++accepted;
        ++graphs;
        for (std::uint64_t run = 0; run < 10; ++run) {
            Matching m = maximum_matching(g, *bp, run * 104729 + i);
            if (!check_condition_b(g, build_labeling(g, *bp, m)).has_value()) {
                ++discrepancies;
                break;
            }
        }
    }

    std::ostringstream detail;
    detail << "matching independence over " << graphs
           << " graphs x 10 randomized perfect matchings: " << discrepancies << " discrepancies";
    record(5, discrepancies == 0 && graphs == 2000, detail.str());
}

void criterion_6() {
    long failures = 0;
    long closed_relations = 0;
    long unmixed_graphs = 0;

    for (int dim = 1; dim <= 3; ++dim) {
        const int off_diagonal = dim * dim - dim;

        // Soundness: every closed reflexive relation generates an unmixed graph.
        std::set<std::vector<bool>> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off_diagonal); ++mask) {
            PreorderRelation rel = PreorderRelation::identity(dim);
            int bit = 0;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    if (i == j) continue;
                    if ((mask >> bit) & 1) rel.set(i, j);
                    ++bit;
                }
            rel.close_transitively();
            std::vector<bool> flat;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) flat.push_back(rel.at(i, j));
            if (!seen.insert(flat).second) continue;
            ++closed_relations;
            if (!oracle::unmixed_by_definition(from_preorder(rel).graph).unmixed) ++failures;
        }

        // Completeness: every unmixed diagonal-matched labeled graph is the
        // graph of its own relation matrix.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off_diagonal); ++mask) {
            Graph::Builder b;
            for (int i = 0; i < dim; ++i) b.add_vertex("x" + std::to_string(i + 1));
            for (int i = 0; i < dim; ++i) b.add_vertex("y" + std::to_string(i + 1));
            PreorderRelation rel = PreorderRelation::identity(dim);
            int bit = 0;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    if (i == j) continue;
                    if ((mask >> bit) & 1) rel.set(i, j);
                    ++bit;
                }
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    if (rel.at(i, j)) b.add_edge(i, dim + j);
            Graph g = b.build();
            if (!oracle::unmixed_by_definition(g).unmixed) continue;
            ++unmixed_graphs;
            try {
                if (from_preorder(rel).graph != g) ++failures;
            } catch (const Error&) {
                ++failures;  // relation of an unmixed graph must be a preorder
            }
        }
    }

    std::ostringstream detail;
    detail << "generator soundness on " << closed_relations
           << " closed relations and completeness on " << unmixed_graphs
           << " unmixed labeled graphs (g <= 3): " << failures << " failures";
    record(6, failures == 0, detail.str());
}

void criterion_7() {
    long mismatches = 0;
    long accepted = 0;
    std::size_t attempt = 0;
    while (accepted < 2000 && attempt < 2000000) {
        const std::size_t i = attempt++;
        const int n = 1 + static_cast<int>(i % 7);
        const double p = 0.3 + 0.2 * (i % 3);
        Graph g = random_bipartite(n, n, p, 0x4AC10000 + i);
        auto colored = two_color(g);
        auto* bp = std::get_if<Bipartition>(&colored);
        if (!bp || bp->side1.size() != bp->side2.size()) continue;
        Matching m = maximum_matching(g, *bp);
        if (2 * m.size() != g.vertex_count() || g.vertex_count() == 0) continue;
        ++accepted;
        bool ravindra_ok = !check_ravindra(g, *bp, m).has_value();
        bool unmixed_verdict = decide_unmixed(g).verdict == Verdict::Unmixed;
        if (ravindra_ok != unmixed_verdict) ++mismatches;
    }
    std::ostringstream detail;
    detail << "ravindra equivalence on " << accepted
           << " random bipartite graphs with perfect matchings: " << mismatches << " mismatches";
    record(7, mismatches == 0 && accepted == 2000, detail.str());
}

void criterion_8() {
    long mismatches = 0;
    for (std::size_t i = 0; i < 1000; ++i) {
        const int n = 3 + static_cast<int>(i % 18);  // 3..20
        Graph tree = random_tree(n, 0x72EE0000 + i);
        bool corollary = check_tree_corollary(tree);
        if (corollary != (decide_unmixed(tree).verdict == Verdict::Unmixed)) ++mismatches;
        if (n <= 16 && corollary != oracle::unmixed_by_definition(tree).unmixed) ++mismatches;
    }
    std::ostringstream detail;
    detail << "tree corollary on 1000 uniform random trees (3 <= n <= 20): " << mismatches
           << " mismatches";
    record(8, mismatches == 0, detail.str());
}

void criterion_9(const CorpusAudit& audit) {
    std::ostringstream detail;
    detail << "konig equality (matching size vs oracle minimum cover) across criteria 1-2 "
              "corpora: "
           << audit.konig_mismatches << " mismatches";
    record(9, audit.konig_mismatches == 0, detail.str());
}

void criterion_10() {
    const int dim = 1000;
    Graph g = from_preorder(random_preorder(dim, 0.01, 0xFA57)).graph;

    auto start = Clock::now();
    UnmixedReport report = decide_unmixed(g);
    double elapsed = seconds_since(start);

    // Instrumented scan cost against the predicted adjacency-test budget.
    auto colored = two_color(g);
    const auto& bp = std::get<Bipartition>(colored);
    MatchedLabeling lab = build_labeling(g, bp, maximum_matching(g, bp));
    std::uint64_t predicted = 0;
    for (std::size_t i = 0; i < lab.pair_count(); ++i)
        predicted += static_cast<std::uint64_t>(g.degree(lab.x[i])) * g.degree(lab.y[i]);
    std::uint64_t measured = 0;
    check_condition_b(g, lab, &measured);

    bool ok = report.verdict == Verdict::Unmixed && elapsed < 5.0 && measured <= 2 * predicted;
    std::ostringstream detail;
    detail << "performance, preorder g=1000 p=0.01 (|E|=" << g.edge_count()
           << "): decide in " << elapsed << " s (limit 5 s), " << measured
           << " adjacency tests vs budget 2x" << predicted;
    record(10, ok, detail.str());
}

}  // namespace

int main() {
    CorpusAudit audit;
    criterion_1_and_later(audit);
    criterion_2_and_later(audit);
    criterion_3();
    criterion_4(audit);
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(audit);
    criterion_10();

    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed;
}
