#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "unmixed/graph.hpp"

namespace unmixed {

/// A two-coloring of the vertex set; every edge joins side1 with side2.
struct Bipartition {
    VertexSet side1;
    VertexSet side2;
};

/// A set of pairwise vertex-disjoint edges, stored as (side1, side2) pairs
/// sorted ascending by the side1 endpoint.
struct Matching {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::size_t size() const { return pairs.size(); }
};

/// Certificate of non-bipartiteness: a closed walk of odd length over
/// distinct vertices, consecutive entries adjacent, last adjacent to first.
struct OddCycleWitness {
    std::vector<VertexId> cycle;
};

using TwoColorResult = std::variant<Bipartition, OddCycleWitness>;

/// Two-colors the graph or returns an odd cycle. Canonical choice: components
/// are processed in ascending order of their minimum vertex index, and that
/// minimum-index vertex goes to side1.
TwoColorResult two_color(const Graph& g);

/// Maximum matching via Hopcroft-Karp. Deterministic: side1 vertices are
/// tried in ascending index order, neighbors in ascending index order.
Matching maximum_matching(const Graph& g, const Bipartition& bp);

/// Same result size, but augmenting order is shuffled by `seed`; used to
/// sample distinct maximum matchings.
Matching maximum_matching(const Graph& g, const Bipartition& bp, std::uint64_t seed);

/// Minimum vertex cover of size |m| from a maximum matching, via alternating
/// reachability from the unmatched side1 vertices. Throws NotMaximumError if
/// an augmenting path exists for m.
VertexSet konig_min_cover(const Graph& g, const Bipartition& bp, const Matching& m);

}  // namespace unmixed
