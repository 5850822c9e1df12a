#pragma once

#include <cstdint>
#include <vector>

#include "unmixed/decide.hpp"
#include "unmixed/graph.hpp"

namespace unmixed {

/// A g x g boolean relation matrix; rel(i,j) means "edge {x_i, y_j} present".
/// Valid seeds for the unmixed generator are reflexive and transitive.
class PreorderRelation {
public:
    PreorderRelation() = default;
    /// All-false matrix of the given dimension.
    explicit PreorderRelation(int size);

    static PreorderRelation identity(int size);
    static PreorderRelation full(int size);

    int size() const { return size_; }
    bool at(int i, int j) const;
    void set(int i, int j, bool value = true);

    /// Warshall closure in place: afterwards rel(i,j) and rel(j,k) imply
    /// rel(i,k). Bitwise over 64-entry row blocks.
    void close_transitively();
    bool is_transitively_closed() const;

    /// Throws NotReflexiveError or NotTransitiveError (1-based indices) on
    /// the first violation in (i), respectively (i,j,k), scan order.
    void validate() const;

    friend bool operator==(const PreorderRelation&, const PreorderRelation&) = default;

private:
    const std::uint64_t* row(int i) const { return &bits_[static_cast<std::size_t>(i) * words_]; }
    std::uint64_t* row(int i) { return &bits_[static_cast<std::size_t>(i) * words_]; }

    int size_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct PreorderGraph {
    Graph graph;
    MatchedLabeling labeling;
};

/// Bipartite graph on x_1..x_g, y_1..y_g with edges {x_i, y_j} exactly where
/// the relation holds. The returned labeling pairs x_i with y_i; reflexivity
/// and transitivity of the relation make the graph unmixed by construction.
/// Throws NotReflexiveError / NotTransitiveError.
PreorderGraph from_preorder(const PreorderRelation& r);

/// Reads the relation matrix back off a labeled graph: rel(i,j) iff
/// {x_i, y_j} is an edge.
PreorderRelation labeling_relation(const Graph& g, const MatchedLabeling& lab);

/// Identity relation plus each off-diagonal pair independently with
/// probability p, transitively closed. Deterministic per (g, p, seed).
PreorderRelation random_preorder(int g, double p, std::uint64_t seed);

/// Each of the n1*n2 cross pairs is an edge independently with probability p.
/// Vertices are named x1..x{n1} and y1..y{n2}; deterministic per seed.
Graph random_bipartite(int n1, int n2, double p, std::uint64_t seed);

/// Uniform random labeled tree on v1..vn (Pruefer-sequence decoding).
Graph random_tree(int n, std::uint64_t seed);

}  // namespace unmixed
