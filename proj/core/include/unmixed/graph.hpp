#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "unmixed/errors.hpp"

namespace unmixed {

/// Dense vertex index, assigned in first-appearance order of names.
using VertexId = std::int32_t;

/// A sorted, duplicate-free set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> ids);

    bool contains(VertexId v) const;
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<VertexId>& ids() const { return ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    /// Lexicographic on the sorted index sequence.
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
        return a.ids_ <=> b.ids_;
    }

private:
    std::vector<VertexId> ids_;
};

/// Immutable finite simple undirected graph. Vertices carry external string
/// names; all computation runs on dense indices 0..n-1. No self-loops, no
/// duplicate edges; adjacency membership tests are O(1) expected.
class Graph {
public:
    class Builder {
    public:
        /// Returns the index of `name`, creating the vertex on first use.
        VertexId add_vertex(std::string_view name);
        /// Adds an undirected edge; duplicates collapse silently.
        void add_edge(std::string_view a, std::string_view b);
        void add_edge(VertexId u, VertexId v);
        Graph build();

    private:
        std::vector<std::string> names_;
        std::unordered_map<std::string, VertexId> index_of_;
        std::vector<std::pair<VertexId, VertexId>> edges_;
        std::unordered_set<std::uint64_t> edge_keys_;
    };

    Graph() = default;

    /// Parses the edge-list text format: one edge `NAME1 NAME2` per line, a
    /// single `NAME` declares an isolated vertex, `#` starts a comment, blank
    /// lines are ignored. Throws SelfLoopError or MalformedLineError.
    static Graph parse_edge_list(std::istream& in);
    static Graph parse_edge_list(std::string_view text);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(VertexId v) const;
    std::optional<VertexId> find_vertex(std::string_view name) const;

    bool has_edge(VertexId u, VertexId v) const;
    /// Neighbor indices of v, sorted ascending.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const;
    /// All edges as (u, v) pairs with u < v, sorted lexicographically.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    /// Subgraph on `keep`, retaining every edge with both endpoints inside.
    /// Vertex names are preserved; relative index order is preserved.
    Graph induced_subgraph(const VertexSet& keep) const;

    /// Serializes to the edge-list format: every vertex name on its own line
    /// in index order, then every edge. Re-parsing yields an equal graph.
    std::string to_edge_list() const;

    /// Equal names in equal order and equal edge sets.
    bool operator==(const Graph& other) const {
        return names_ == other.names_ && edges_ == other.edges_;
    }

private:
    void check_vertex(VertexId v) const;

    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_of_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

struct StripResult {
    Graph graph;          // input graph minus degree-0 vertices
    VertexSet removed;    // indices in the *input* graph
};

/// Removes all isolated vertices. Minimal-cover sizes are unchanged since a
/// degree-0 vertex belongs to no minimal cover.
StripResult strip_isolated(const Graph& g);

/// Connected-component label per vertex; components numbered in ascending
/// order of their minimum vertex index, starting at 0.
std::vector<int> component_ids(const Graph& g);

}  // namespace unmixed
