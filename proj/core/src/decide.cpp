#include "unmixed/decide.hpp"

#include <algorithm>
#include <variant>

namespace unmixed {

namespace {

// Orients every matching pair with its side1 endpoint first and sorts by it.
std::vector<std::pair<VertexId, VertexId>> oriented_pairs(const Graph& g,
                                                          const Bipartition& bp,
                                                          const Matching& m) {
    std::vector<bool> in_side1(g.vertex_count(), false);
    for (VertexId v : bp.side1) in_side1[v] = true;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(m.pairs.size());
    for (auto [a, b] : m.pairs) {
        if (in_side1[a] == in_side1[b]) throw Error("matching pair does not cross the bipartition");
        pairs.emplace_back(in_side1[a] ? a : b, in_side1[a] ? b : a);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

void require_perfect(const Graph& g, const Bipartition& bp, const Matching& m) {
    if (2 * m.size() != g.vertex_count() || m.size() != bp.side1.size() ||
        m.size() != bp.side2.size())
        throw NotPerfectError("matching of size " + std::to_string(m.size()) +
                              " is not perfect on " + std::to_string(g.vertex_count()) +
                              " vertices");
}

}  // namespace

MatchedLabeling build_labeling(const Graph& g, const Bipartition& bp, const Matching& m) {
    require_perfect(g, bp, m);
    MatchedLabeling lab;
    lab.x.reserve(m.size());
    lab.y.reserve(m.size());
    for (auto [x, y] : oriented_pairs(g, bp, m)) {
        lab.x.push_back(x);
        lab.y.push_back(y);
    }
    return lab;
}

std::optional<FailingTriple> check_condition_b(const Graph& g, const MatchedLabeling& lab,
                                               std::uint64_t* adjacency_tests) {
    const int label_count = static_cast<int>(lab.pair_count());
    std::uint64_t tests = 0;
    if (adjacency_tests) *adjacency_tests = 0;
    if (label_count < 3) return std::nullopt;  // no three distinct positions

    std::vector<int> pos_x(g.vertex_count(), -1), pos_y(g.vertex_count(), -1);
    for (int i = 0; i < label_count; ++i) {
        pos_x[lab.x[i]] = i;
        pos_y[lab.y[i]] = i;
    }

    // row[i] holds the bitset { k : {x_i, y_k} in E }, so each adjacency test
    // in the scan below is a single bit probe.
    const int words = (label_count + 63) / 64;
    std::vector<std::uint64_t> row(static_cast<std::size_t>(label_count) * words, 0);
    for (int i = 0; i < label_count; ++i) {
        auto* bits = &row[static_cast<std::size_t>(i) * words];
        for (VertexId w : g.neighbors(lab.x[i])) {
            int k = pos_y[w];
            bits[k >> 6] |= std::uint64_t{1} << (k & 63);
        }
    }

    std::vector<int> lefts, rights;
    for (int j = 0; j < label_count; ++j) {
        lefts.clear();
        for (VertexId w : g.neighbors(lab.y[j])) {
            int i = pos_x[w];
            if (i != j) lefts.push_back(i);
        }
        rights.clear();
        for (VertexId w : g.neighbors(lab.x[j])) {
            int k = pos_y[w];
            if (k != j) rights.push_back(k);
        }
        std::sort(lefts.begin(), lefts.end());
        std::sort(rights.begin(), rights.end());
        for (int i : lefts) {
            const auto* bits = &row[static_cast<std::size_t>(i) * words];
            for (int k : rights) {
                if (k == i) continue;
                ++tests;
                if (!((bits[k >> 6] >> (k & 63)) & 1)) {
                    if (adjacency_tests) *adjacency_tests = tests;
                    return FailingTriple{i + 1, j + 1, k + 1};
                }
            }
        }
    }
    if (adjacency_tests) *adjacency_tests = tests;
    return std::nullopt;
}

VertexSet mixed_witness_from_triple(const Graph& g, const MatchedLabeling& lab,
                                    const FailingTriple& t) {
    const int label_count = static_cast<int>(lab.pair_count());
    auto in_range = [&](int p) { return p >= 1 && p <= label_count; };
    if (!in_range(t.i) || !in_range(t.j) || !in_range(t.k) || t.i == t.j || t.j == t.k ||
        t.i == t.k)
        throw InvalidTripleError("triple positions must be distinct and within 1..g");
    VertexId xi = lab.x[t.i - 1], xj = lab.x[t.j - 1];
    VertexId yj = lab.y[t.j - 1], yk = lab.y[t.k - 1];
    if (!g.has_edge(xi, yj) || !g.has_edge(xj, yk) || g.has_edge(xi, yk))
        throw InvalidTripleError("triple adjacencies do not hold on this graph");

    const auto n = static_cast<VertexId>(g.vertex_count());
    std::vector<bool> in_set(n, false), blocked(n, false);
    auto add = [&](VertexId v) {
        in_set[v] = true;
        for (VertexId u : g.neighbors(v)) blocked[u] = true;
    };
    add(xi);
    add(yk);
    for (VertexId v = 0; v < n; ++v)
        if (!in_set[v] && !blocked[v]) add(v);

    std::vector<VertexId> cover;
    for (VertexId v = 0; v < n; ++v)
        if (!in_set[v]) cover.push_back(v);
    return VertexSet(std::move(cover));
}

UnmixedReport decide_with_bipartition(const Graph& g, const Bipartition& bp) {
    UnmixedReport report;
    report.graph = g;

    if (bp.side1.size() != bp.side2.size()) {
        const bool first_smaller = bp.side1.size() < bp.side2.size();
        report.verdict = Verdict::Mixed;
        report.reason = MixedReason::UnequalSides;
        report.cover_small = first_smaller ? bp.side1 : bp.side2;
        report.cover_large = first_smaller ? bp.side2 : bp.side1;
        return report;
    }

    Matching m = maximum_matching(g, bp);
    if (m.size() < bp.side1.size()) {
        report.verdict = Verdict::Mixed;
        report.reason = MixedReason::NoPerfectMatching;
        report.cover_small = konig_min_cover(g, bp, m);
        report.cover_large = bp.side1;
        return report;
    }

    MatchedLabeling lab = build_labeling(g, bp, m);
    if (auto triple = check_condition_b(g, lab)) {
        report.verdict = Verdict::Mixed;
        report.reason = MixedReason::ConditionBFails;
        report.failing_triple = triple;
        report.cover_small = bp.side1;
        report.cover_large = mixed_witness_from_triple(g, lab, *triple);
        return report;
    }

    report.verdict = Verdict::Unmixed;
    report.labeling = std::move(lab);
    return report;
}

UnmixedReport decide_unmixed(const Graph& g) {
    StripResult stripped = strip_isolated(g);
    std::vector<std::string> removed_names;
    removed_names.reserve(stripped.removed.size());
    for (VertexId v : stripped.removed) removed_names.push_back(g.name(v));

    if (stripped.graph.vertex_count() == 0) {
        // Only the empty cover remains, so every minimal cover has size 0.
        UnmixedReport report;
        report.verdict = Verdict::Unmixed;
        report.graph = std::move(stripped.graph);
        report.stripped_isolated = std::move(removed_names);
        report.labeling = MatchedLabeling{};
        return report;
    }

    TwoColorResult colored = two_color(stripped.graph);
    if (auto* odd = std::get_if<OddCycleWitness>(&colored)) {
        UnmixedReport report;
        report.verdict = Verdict::NotBipartite;
        report.graph = std::move(stripped.graph);
        report.stripped_isolated = std::move(removed_names);
        report.odd_cycle = std::move(*odd);
        return report;
    }

    UnmixedReport report = decide_with_bipartition(stripped.graph, std::get<Bipartition>(colored));
    report.stripped_isolated = std::move(removed_names);
    return report;
}

std::optional<std::pair<VertexId, VertexId>> check_ravindra(const Graph& g,
                                                            const Bipartition& bp,
                                                            const Matching& m) {
    require_perfect(g, bp, m);
    for (auto [x, y] : oriented_pairs(g, bp, m)) {
        for (VertexId u : g.neighbors(y))
            for (VertexId v : g.neighbors(x))
                if (!g.has_edge(u, v)) return std::make_pair(x, y);
    }
    return std::nullopt;
}

bool check_tree_corollary(const Graph& g) {
    const auto n = g.vertex_count();
    if (n < 3) throw TooSmallError("tree check needs at least 3 vertices");
    auto comp = component_ids(g);
    if (!comp.empty() && *std::max_element(comp.begin(), comp.end()) != 0)
        throw NotATreeError("graph is disconnected");
    if (g.edge_count() != n - 1)
        throw NotATreeError("graph has " + std::to_string(g.edge_count()) +
                            " edges, a tree on " + std::to_string(n) + " vertices has " +
                            std::to_string(n - 1));

    TwoColorResult colored = two_color(g);
    const auto& bp = std::get<Bipartition>(colored);
    if (bp.side1.size() != bp.side2.size()) return false;
    Matching m = maximum_matching(g, bp);
    if (2 * m.size() != n) return false;
    for (auto [x, y] : m.pairs)
        if (g.degree(x) != 1 && g.degree(y) != 1) return false;
    return true;
}

}  // namespace unmixed
