#include "unmixed/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>

namespace unmixed {

namespace {

constexpr VertexId kNil = -1;
constexpr int kInf = std::numeric_limits<int>::max();

OddCycleWitness make_odd_cycle(VertexId a, VertexId b, const std::vector<VertexId>& parent,
                               const std::vector<int>& depth) {
    // a and b are adjacent, same color, same BFS tree. Climb both to the
    // lowest common ancestor; the two tree paths plus edge {a,b} close an
    // odd cycle over distinct vertices.
    std::vector<VertexId> up_a, up_b;
    VertexId x = a, y = b;
    while (depth[x] > depth[y]) {
        up_a.push_back(x);
        x = parent[x];
    }
    while (depth[y] > depth[x]) {
        up_b.push_back(y);
        y = parent[y];
    }
    while (x != y) {
        up_a.push_back(x);
        up_b.push_back(y);
        x = parent[x];
        y = parent[y];
    }
    OddCycleWitness witness;
    witness.cycle = std::move(up_a);
    witness.cycle.push_back(x);  // the common ancestor
    witness.cycle.insert(witness.cycle.end(), up_b.rbegin(), up_b.rend());
    return witness;
}

// Hopcroft-Karp with a caller-supplied try order for side1 vertices and
// per-vertex neighbor order.
class HopcroftKarp {
public:
    HopcroftKarp(std::size_t n, std::vector<VertexId> lefts,
                 std::vector<std::vector<VertexId>> adj)
        : lefts_(std::move(lefts)),
          adj_(std::move(adj)),
          match_(n, kNil),
          dist_(n, kInf) {}

    Matching run() {
        while (bfs()) {
            for (VertexId u : lefts_)
                if (match_[u] == kNil) dfs(u);
        }
        Matching m;
        for (VertexId u : lefts_)
            if (match_[u] != kNil) m.pairs.emplace_back(u, match_[u]);
        std::sort(m.pairs.begin(), m.pairs.end());
        return m;
    }

private:
    bool bfs() {
        std::deque<VertexId> queue;
        for (VertexId u : lefts_) {
            if (match_[u] == kNil) {
                dist_[u] = 0;
                queue.push_back(u);
            } else {
                dist_[u] = kInf;
            }
        }
        dist_nil_ = kInf;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            if (dist_[u] >= dist_nil_) continue;
            for (VertexId w : adj_[u]) {
                VertexId next = match_[w];
                if (next == kNil) {
                    if (dist_nil_ == kInf) dist_nil_ = dist_[u] + 1;
                } else if (dist_[next] == kInf) {
                    dist_[next] = dist_[u] + 1;
                    queue.push_back(next);
                }
            }
        }
        return dist_nil_ != kInf;
    }

    bool dfs(VertexId u) {
        for (VertexId w : adj_[u]) {
            VertexId next = match_[w];
            if ((next == kNil && dist_[u] + 1 == dist_nil_) ||
                (next != kNil && dist_[next] == dist_[u] + 1 && dfs(next))) {
                match_[w] = u;
                match_[u] = w;
                return true;
            }
        }
        dist_[u] = kInf;
        return false;
    }

    std::vector<VertexId> lefts_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<VertexId> match_;
    std::vector<int> dist_;
    int dist_nil_ = kInf;
};

Matching run_matching(const Graph& g, const Bipartition& bp,
                      std::optional<std::uint64_t> seed) {
    std::vector<VertexId> lefts(bp.side1.begin(), bp.side1.end());
    std::vector<std::vector<VertexId>> adj(g.vertex_count());
    for (VertexId u : lefts) adj[u] = g.neighbors(u);
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(lefts.begin(), lefts.end(), rng);
        for (VertexId u : lefts) std::shuffle(adj[u].begin(), adj[u].end(), rng);
    }
    return HopcroftKarp(g.vertex_count(), std::move(lefts), std::move(adj)).run();
}

}  // namespace

TwoColorResult two_color(const Graph& g) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    std::vector<int> color(n, -1), depth(n, 0);
    std::vector<VertexId> parent(n, kNil);
    std::deque<VertexId> queue;
    for (VertexId start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        queue.push_back(start);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId u : g.neighbors(v)) {
                if (color[u] < 0) {
                    color[u] = color[v] ^ 1;
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return make_odd_cycle(v, u, parent, depth);
                }
            }
        }
    }
    std::vector<VertexId> side1, side2;
    for (VertexId v = 0; v < n; ++v) (color[v] == 0 ? side1 : side2).push_back(v);
    return Bipartition{VertexSet(std::move(side1)), VertexSet(std::move(side2))};
}

Matching maximum_matching(const Graph& g, const Bipartition& bp) {
    return run_matching(g, bp, std::nullopt);
}

Matching maximum_matching(const Graph& g, const Bipartition& bp, std::uint64_t seed) {
    return run_matching(g, bp, seed);
}

VertexSet konig_min_cover(const Graph& g, const Bipartition& bp, const Matching& m) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    std::vector<VertexId> partner(n, kNil);
    for (auto [u, v] : m.pairs) {
        if (!g.has_edge(u, v)) throw Error("matching pair is not an edge");
        if (partner[u] != kNil || partner[v] != kNil)
            throw Error("matching pairs are not vertex-disjoint");
        partner[u] = v;
        partner[v] = u;
    }

    // Alternating reachability from unmatched side1 vertices: non-matching
    // edges left to right, matching edges right to left.
    std::vector<bool> in_side1(n, false), reached(n, false);
    for (VertexId v : bp.side1) in_side1[v] = true;
    std::deque<VertexId> queue;
    for (VertexId v : bp.side1) {
        if (partner[v] == kNil) {
            reached[v] = true;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (w == partner[u] || reached[w]) continue;
            reached[w] = true;
            if (partner[w] == kNil)
                throw NotMaximumError("matching admits an augmenting path");
            if (!reached[partner[w]]) {
                reached[partner[w]] = true;
                queue.push_back(partner[w]);
            }
        }
    }

    std::vector<VertexId> cover;
    for (VertexId v : bp.side1)
        if (!reached[v]) cover.push_back(v);
    for (VertexId v : bp.side2)
        if (reached[v]) cover.push_back(v);
    return VertexSet(std::move(cover));
}

}  // namespace unmixed
