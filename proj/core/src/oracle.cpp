#include "unmixed/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace unmixed::oracle {

namespace {

constexpr std::size_t kMaskLimit = 64;

void check_subset(const Graph& g, const VertexSet& s) {
    if (!s.empty() && (s.ids().front() < 0 ||
                       static_cast<std::size_t>(s.ids().back()) >= g.vertex_count()))
        throw UnknownVertexError("vertex set is not a subset of the graph");
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> mask(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        mask[u] |= std::uint64_t{1} << v;
        mask[v] |= std::uint64_t{1} << u;
    }
    return mask;
}

// Enumerates every maximal independent set by deciding vertices in ascending
// order. A vertex adjacent to the current set is forced out; otherwise both
// branches are explored, except that leaving an addable vertex out is only
// worth trying when a later neighbor could still dominate it. Leaves are
// checked for maximality.
template <typename Emit>
void enumerate_maximal_independent(int n, const std::vector<std::uint64_t>& adj, Emit&& emit) {
    const std::uint64_t everyone = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto maximal = [&](std::uint64_t chosen) {
        for (int u = 0; u < n; ++u)
            if (!((chosen >> u) & 1) && !(adj[u] & chosen)) return false;
        return true;
    };
    auto recurse = [&](auto&& self, int v, std::uint64_t chosen) -> void {
        if (v == n) {
            if (maximal(chosen)) emit(chosen);
            return;
        }
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (adj[v] & chosen) {
            self(self, v + 1, chosen);
            return;
        }
        self(self, v + 1, chosen | bit);
        const std::uint64_t undecided_above = everyone & ~(bit | (bit - 1));
        if (adj[v] & undecided_above) self(self, v + 1, chosen);
    };
    recurse(recurse, 0, 0);
}

std::vector<std::uint64_t> maximal_independent_masks(const Graph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > cap) throw TooLargeError(n, cap);
    if (n > kMaskLimit) throw TooLargeError(n, kMaskLimit);
    std::vector<std::uint64_t> sets;
    enumerate_maximal_independent(static_cast<int>(n), adjacency_masks(g),
                                  [&](std::uint64_t chosen) { sets.push_back(chosen); });
    return sets;
}

}  // namespace

bool is_vertex_cover(const Graph& g, const VertexSet& c) {
    check_subset(g, c);
    for (auto [u, v] : g.edges())
        if (!c.contains(u) && !c.contains(v)) return false;
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, const VertexSet& c) {
    if (!is_vertex_cover(g, c)) return false;
    // c \ {v} stays a cover exactly when every neighbor of v is in c.
    for (VertexId v : c) {
        bool removable = true;
        for (VertexId u : g.neighbors(v)) {
            if (!c.contains(u)) {
                removable = false;
                break;
            }
        }
        if (removable) return false;
    }
    return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& a) {
    check_subset(g, a);
    for (VertexId v : a)
        for (VertexId u : g.neighbors(v))
            if (a.contains(u)) return false;
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
        if (a.contains(v)) continue;
        bool dominated = false;
        for (VertexId u : g.neighbors(v)) {
            if (a.contains(u)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

std::vector<VertexSet> enumerate_minimal_covers(const Graph& g, std::size_t cap) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    std::vector<VertexSet> covers;
    for (std::uint64_t independent : maximal_independent_masks(g, cap)) {
        std::vector<VertexId> cover;
        for (VertexId v = 0; v < n; ++v)
            if (!((independent >> v) & 1)) cover.push_back(v);
        covers.push_back(VertexSet(std::move(cover)));
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

DefinitionVerdict unmixed_by_definition(const Graph& g, std::size_t cap) {
    DefinitionVerdict verdict;
    for (const VertexSet& cover : enumerate_minimal_covers(g, cap))
        verdict.cover_sizes.push_back(cover.size());
    std::sort(verdict.cover_sizes.begin(), verdict.cover_sizes.end());
    verdict.unmixed = std::adjacent_find(verdict.cover_sizes.begin(), verdict.cover_sizes.end(),
                                         std::not_equal_to<>()) == verdict.cover_sizes.end();
    return verdict;
}

bool well_covered_by_definition(const Graph& g, std::size_t cap) {
    std::vector<std::size_t> sizes;
    for (std::uint64_t independent : maximal_independent_masks(g, cap))
        sizes.push_back(static_cast<std::size_t>(std::popcount(independent)));
    return std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end();
}

}  // namespace unmixed::oracle
