#pragma once

#include <cstddef>
#include <vector>

#include "unmixed/graph.hpp"

namespace unmixed::oracle {

/// Brute-force enumeration is exponential; desk-scale verification only.
inline constexpr std::size_t kDefaultCap = 24;

/// True iff every edge has an endpoint in c.
bool is_vertex_cover(const Graph& g, const VertexSet& c);

/// True iff c is a cover and removing any single vertex uncovers some edge.
bool is_minimal_vertex_cover(const Graph& g, const VertexSet& c);

/// True iff a spans no edge and every outside vertex has a neighbor in a.
bool is_maximal_independent(const Graph& g, const VertexSet& a);

/// Exactly the minimal vertex covers, each once, sorted lexicographically.
/// Computed as complements of all maximal independent sets. Throws
/// TooLargeError above the cap.
std::vector<VertexSet> enumerate_minimal_covers(const Graph& g, std::size_t cap = kDefaultCap);

struct DefinitionVerdict {
    bool unmixed;
    std::vector<std::size_t> cover_sizes;  // ascending multiset
};

/// Decides unmixedness straight from the definition: all minimal vertex
/// covers have equal size. Throws TooLargeError above the cap.
DefinitionVerdict unmixed_by_definition(const Graph& g, std::size_t cap = kDefaultCap);

/// All maximal independent sets have equal size; equivalent to unmixedness
/// by complement duality. Throws TooLargeError above the cap.
bool well_covered_by_definition(const Graph& g, std::size_t cap = kDefaultCap);

}  // namespace unmixed::oracle
