#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unmixed/bipartite.hpp"
#include "unmixed/graph.hpp"

namespace unmixed {

/// An ordered pairing (x_1,y_1),...,(x_g,y_g) realizing a perfect matching:
/// x enumerates side1 in ascending index order, y[i] is the matched partner
/// of x[i], and {x[i], y[i]} is an edge for every i.
struct MatchedLabeling {
    std::vector<VertexId> x;
    std::vector<VertexId> y;
    std::size_t pair_count() const { return x.size(); }
};

/// Witness that the labeling closure condition fails: {x_i,y_j} and {x_j,y_k}
/// are edges but {x_i,y_k} is not. Positions are 1-based and pairwise distinct.
struct FailingTriple {
    int i;
    int j;
    int k;
};

enum class Verdict { Unmixed, Mixed, NotBipartite };

enum class MixedReason { UnequalSides, NoPerfectMatching, ConditionBFails };

/// Decision result with a machine-checkable certificate for either verdict.
/// All certificates refer to `graph`, the input minus isolated vertices.
struct UnmixedReport {
    Verdict verdict = Verdict::Unmixed;
    Graph graph;
    std::vector<std::string> stripped_isolated;  // names removed before deciding

    // Unmixed: a labeling that passes check_condition_b.
    std::optional<MatchedLabeling> labeling;

    // Mixed: two minimal vertex covers of different sizes.
    std::optional<MixedReason> reason;
    VertexSet cover_small;
    VertexSet cover_large;
    std::optional<FailingTriple> failing_triple;  // set when ConditionBFails

    // NotBipartite.
    std::optional<OddCycleWitness> odd_cycle;
};

/// Pairs side1 (ascending) with matched partners. Throws NotPerfectError if
/// the matching leaves any vertex uncovered.
MatchedLabeling build_labeling(const Graph& g, const Bipartition& bp, const Matching& m);

/// Checks that edges {x_i,y_j} and {x_j,y_k} with i,j,k pairwise distinct
/// always force the edge {x_i,y_k}. Returns the first failing triple in
/// lexicographic (j,i,k) scan order, or nullopt when the condition holds.
/// The scan walks adjacency lists, costing O(sum_j deg(x_j)*deg(y_j))
/// adjacency tests; `adjacency_tests`, when non-null, receives the count.
std::optional<FailingTriple> check_condition_b(const Graph& g, const MatchedLabeling& lab,
                                               std::uint64_t* adjacency_tests = nullptr);

/// Greedily extends {x_i, y_k} to a maximal independent set A (ascending
/// vertex index) and returns its complement: a minimal vertex cover of size
/// at least g+1. Throws InvalidTripleError if the triple's adjacencies do
/// not hold.
VertexSet mixed_witness_from_triple(const Graph& g, const MatchedLabeling& lab,
                                    const FailingTriple& t);

/// Full decision procedure: strips isolated vertices, two-colors, and either
/// certifies every minimal cover has the same size (a labeling) or exhibits
/// two minimal covers of different sizes (or an odd cycle).
UnmixedReport decide_unmixed(const Graph& g);

/// Decision body for a fixed bipartition of an isolated-vertex-free graph.
/// Exposed so bipartition-independence can be exercised directly.
UnmixedReport decide_with_bipartition(const Graph& g, const Bipartition& bp);

/// Independent cross-check: a bipartite graph with a perfect matching is
/// unmixed iff every matched edge {x,y} has N(x) and N(y) fully joined, i.e.
/// the induced subgraph on N(x) u N(y) is complete bipartite. Returns the
/// first failing matched edge (ascending by side1 endpoint) or nullopt.
/// Throws NotPerfectError.
std::optional<std::pair<VertexId, VertexId>> check_ravindra(const Graph& g,
                                                            const Bipartition& bp,
                                                            const Matching& m);

/// Tree specialization: a tree with >= 3 vertices is unmixed iff it has a
/// perfect matching and every matched pair contains a leaf. Throws
/// NotATreeError or TooSmallError.
bool check_tree_corollary(const Graph& g);

}  // namespace unmixed
