#include "unmixed/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace unmixed {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    auto [lo, hi] = std::minmax(u, v);
    return (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
}

}  // namespace

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexId Graph::Builder::add_vertex(std::string_view name) {
    auto it = index_of_.find(std::string(name));
    if (it != index_of_.end()) return it->second;
    VertexId id = static_cast<VertexId>(names_.size());
    names_.emplace_back(name);
    index_of_.emplace(names_.back(), id);
    return id;
}

void Graph::Builder::add_edge(std::string_view a, std::string_view b) {
    if (a == b) throw SelfLoopError(std::string(a));
    VertexId u = add_vertex(a);  // sequenced: a must get the smaller index
    VertexId v = add_vertex(b);
    add_edge(u, v);
}

void Graph::Builder::add_edge(VertexId u, VertexId v) {
    if (u == v) throw SelfLoopError(names_.at(u));
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= names_.size() ||
        static_cast<std::size_t>(v) >= names_.size())
        throw UnknownVertexError("edge endpoint out of range");
    if (edge_keys_.insert(edge_key(u, v)).second)
        edges_.emplace_back(std::min(u, v), std::max(u, v));
}

Graph Graph::Builder::build() {
    Graph g;
    g.names_ = std::move(names_);
    g.index_of_ = std::move(index_of_);
    g.edge_keys_ = std::move(edge_keys_);
    std::sort(edges_.begin(), edges_.end());
    g.edges_ = std::move(edges_);
    g.adj_.resize(g.names_.size());
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

Graph Graph::parse_edge_list(std::istream& in) {
    Builder builder;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string first, second, extra;
        if (!(tokens >> first)) continue;
        if (!(tokens >> second)) {
            builder.add_vertex(first);
            continue;
        }
        if (tokens >> extra) throw MalformedLineError(line_no);
        builder.add_edge(first, second);
    }
    return builder.build();
}

Graph Graph::parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= names_.size())
        throw UnknownVertexError("vertex index " + std::to_string(v) +
                                 " out of range for graph with " +
                                 std::to_string(names_.size()) + " vertices");
}

const std::string& Graph::name(VertexId v) const {
    check_vertex(v);
    return names_[v];
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = index_of_.find(std::string(name));
    if (it == index_of_.end()) return std::nullopt;
    return it->second;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return edge_keys_.contains(edge_key(u, v));
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

std::size_t Graph::degree(VertexId v) const {
    check_vertex(v);
    return adj_[v].size();
}

Graph Graph::induced_subgraph(const VertexSet& keep) const {
    Builder builder;
    for (VertexId v : keep) builder.add_vertex(name(v));
    for (auto [u, v] : edges_)
        if (keep.contains(u) && keep.contains(v)) builder.add_edge(names_[u], names_[v]);
    return builder.build();
}

std::string Graph::to_edge_list() const {
    std::string out;
    for (const auto& n : names_) {
        out += n;
        out += '\n';
    }
    for (auto [u, v] : edges_) {
        out += names_[u];
        out += ' ';
        out += names_[v];
        out += '\n';
    }
    return out;
}

StripResult strip_isolated(const Graph& g) {
    std::vector<VertexId> kept, removed;
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
        (g.degree(v) == 0 ? removed : kept).push_back(v);
    StripResult result;
    result.removed = VertexSet(std::move(removed));
    result.graph = g.induced_subgraph(VertexSet(std::move(kept)));
    return result;
}

std::vector<int> component_ids(const Graph& g) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = next;
        stack.push_back(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.neighbors(v)) {
                if (comp[u] < 0) {
                    comp[u] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace unmixed
