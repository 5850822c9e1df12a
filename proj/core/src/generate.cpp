#include "unmixed/generate.hpp"

#include <bit>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace unmixed {

namespace {

// Uniform draw in [0,1) from the top 53 bits; keeps p=0 and p=1 exact.
bool chance(std::mt19937_64& rng, double p) {
    return (rng() >> 11) * 0x1.0p-53 < p;
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("probability must lie in [0,1]");
}

std::string x_name(int i) { return "x" + std::to_string(i + 1); }
std::string y_name(int i) { return "y" + std::to_string(i + 1); }

}  // namespace

PreorderRelation::PreorderRelation(int size)
    : size_(size), words_((size + 63) / 64), bits_(static_cast<std::size_t>(size) * words_, 0) {
    if (size < 0) throw Error("relation dimension must be non-negative");
}

PreorderRelation PreorderRelation::identity(int size) {
    PreorderRelation r(size);
    for (int i = 0; i < size; ++i) r.set(i, i);
    return r;
}

PreorderRelation PreorderRelation::full(int size) {
    PreorderRelation r(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) r.set(i, j);
    return r;
}

bool PreorderRelation::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= size_ || j >= size_)
        throw Error("relation index out of range");
    return (row(i)[j >> 6] >> (j & 63)) & 1;
}

void PreorderRelation::set(int i, int j, bool value) {
    if (i < 0 || j < 0 || i >= size_ || j >= size_)
        throw Error("relation index out of range");
    if (value)
        row(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
    else
        row(i)[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
}

void PreorderRelation::close_transitively() {
    for (int k = 0; k < size_; ++k) {
        const std::uint64_t* via = row(k);
        for (int i = 0; i < size_; ++i) {
            if (!at(i, k)) continue;
            std::uint64_t* target = row(i);
            for (int w = 0; w < words_; ++w) target[w] |= via[w];
        }
    }
}

bool PreorderRelation::is_transitively_closed() const {
    for (int i = 0; i < size_; ++i) {
        const std::uint64_t* wide = row(i);
        for (int j = 0; j < size_; ++j) {
            if (!at(i, j)) continue;
            const std::uint64_t* narrow = row(j);
            for (int w = 0; w < words_; ++w)
                if (narrow[w] & ~wide[w]) return false;
        }
    }
    return true;
}

void PreorderRelation::validate() const {
    for (int i = 0; i < size_; ++i)
        if (!at(i, i)) throw NotReflexiveError(i + 1);
    for (int i = 0; i < size_; ++i) {
        const std::uint64_t* wide = row(i);
        for (int j = 0; j < size_; ++j) {
            if (i == j || !at(i, j)) continue;
            const std::uint64_t* narrow = row(j);
            for (int w = 0; w < words_; ++w) {
                if (std::uint64_t missing = narrow[w] & ~wide[w]) {
                    int k = w * 64 + std::countr_zero(missing);
                    throw NotTransitiveError(i + 1, j + 1, k + 1);
                }
            }
        }
    }
}

PreorderGraph from_preorder(const PreorderRelation& r) {
    r.validate();
    const int g = r.size();
    Graph::Builder builder;
    PreorderGraph result;
    for (int i = 0; i < g; ++i) result.labeling.x.push_back(builder.add_vertex(x_name(i)));
    for (int i = 0; i < g; ++i) result.labeling.y.push_back(builder.add_vertex(y_name(i)));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (r.at(i, j)) builder.add_edge(result.labeling.x[i], result.labeling.y[j]);
    result.graph = builder.build();
    return result;
}

PreorderRelation labeling_relation(const Graph& g, const MatchedLabeling& lab) {
    const int size = static_cast<int>(lab.pair_count());
    PreorderRelation r(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (g.has_edge(lab.x[i], lab.y[j])) r.set(i, j);
    return r;
}

PreorderRelation random_preorder(int g, double p, std::uint64_t seed) {
    if (g < 1) throw Error("relation dimension must be positive");
    check_probability(p);
    PreorderRelation r = PreorderRelation::identity(g);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (i != j && chance(rng, p)) r.set(i, j);
    r.close_transitively();
    return r;
}

Graph random_bipartite(int n1, int n2, double p, std::uint64_t seed) {
    if (n1 < 0 || n2 < 0) throw Error("part sizes must be non-negative");
    check_probability(p);
    Graph::Builder builder;
    for (int i = 0; i < n1; ++i) builder.add_vertex(x_name(i));
    for (int j = 0; j < n2; ++j) builder.add_vertex(y_name(j));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            if (chance(rng, p)) builder.add_edge(i, n1 + j);
    return builder.build();
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw Error("tree size must be positive");
    Graph::Builder builder;
    for (int v = 0; v < n; ++v) builder.add_vertex("v" + std::to_string(v + 1));
    if (n >= 2) {
        std::mt19937_64 rng(seed);
        std::vector<int> pruefer(n - 2);
        for (int& entry : pruefer) entry = static_cast<int>(rng() % n);

        std::vector<int> degree(n, 1);
        for (int entry : pruefer) ++degree[entry];
        std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) leaves.push(v);
        for (int entry : pruefer) {
            int leaf = leaves.top();
            leaves.pop();
            builder.add_edge(leaf, entry);
            if (--degree[entry] == 1) leaves.push(entry);
        }
        int a = leaves.top();
        leaves.pop();
        builder.add_edge(a, leaves.top());
    }
    return builder.build();
}

}  // namespace unmixed
