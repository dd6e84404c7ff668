#include "localhk/graph.hpp"

#include <algorithm>
#include <limits>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <string>

#include "localhk/error.hpp"
#include "text_io.hpp"

namespace localhk {

using detail::for_each_record;
using detail::open_or_throw;
using detail::parse_label;

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<OriginalId> original_ids) {
    if (original_ids.empty()) {
        original_ids.resize(n);
        for (std::size_t i = 0; i < n; ++i) original_ids[i] = i;
    }
    if (original_ids.size() != n) throw Error("original id table does not match vertex count");
    if (!std::is_sorted(original_ids.begin(), original_ids.end()) ||
        std::adjacent_find(original_ids.begin(), original_ids.end()) != original_ids.end()) {
        throw Error("original ids must be strictly increasing");
    }
    original_ids_ = std::move(original_ids);

    for (auto& e : edges) {
        if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= n || e.v >= n) throw Error("edge endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[cursor[e.u]++] = e.v;
        adjacency_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<VertexId> Graph::find(OriginalId label) const {
    const auto it = std::lower_bound(original_ids_.begin(), original_ids_.end(), label);
    if (it == original_ids_.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - original_ids_.begin());
}

VertexId Graph::index_of(OriginalId label) const {
    if (auto v = find(label)) return *v;
    throw Error("vertex " + std::to_string(label) + " is not in the graph");
}

Graph load_graph(std::istream& in) {
    std::vector<std::pair<OriginalId, OriginalId>> raw;
    for_each_record(in, [&](const std::vector<std::string_view>& tokens, std::size_t line) {
        if (tokens.size() != 2) {
            throw ParseError("expected exactly two vertex ids, got " + std::to_string(tokens.size()),
                             line);
        }
        const auto a = parse_label(tokens[0], line);
        const auto b = parse_label(tokens[1], line);
        if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line);
        raw.emplace_back(a, b);
    });

    std::vector<OriginalId> labels;
    labels.reserve(raw.size() * 2);
    for (const auto& [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() > std::numeric_limits<VertexId>::max()) throw CapacityError("too many vertices");

    auto compact = [&](OriginalId label) {
        return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), label) -
                                     labels.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& [a, b] : raw) edges.push_back({compact(a), compact(b)});
    const auto n = labels.size();
    return Graph(n, std::move(edges), std::move(labels));
}

Graph load_graph(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return load_graph(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& e : g.edges()) out << g.original_id(e.u) << ' ' << g.original_id(e.v) << '\n';
}

VertexSubset::VertexSubset(std::size_t n, std::vector<VertexId> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw Error("subset contains a duplicate vertex");
    }
    if (!members.empty() && members.back() >= n) throw Error("subset vertex out of range");
    members_ = std::move(members);
}

std::optional<std::size_t> VertexSubset::local_of(VertexId v) const {
    const auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

std::vector<VertexId> vertex_boundary(const Graph& g, const VertexSubset& s) {
    std::vector<VertexId> out;
    for (const auto v : s.members()) {
        for (const auto u : g.neighbors(v)) {
            if (!s.contains(u)) out.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Edge> edge_boundary(const Graph& g, const VertexSubset& s) {
    std::vector<Edge> out;
    for (const auto v : s.members()) {
        for (const auto u : g.neighbors(v)) {
            if (!s.contains(u)) out.push_back(u < v ? Edge{u, v} : Edge{v, u});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected_induced(const Graph& g, const VertexSubset& s) {
    if (s.empty()) return false;
    std::vector<bool> seen(s.size(), false);
    std::queue<std::size_t> frontier;
    seen[0] = true;
    frontier.push(0);
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const auto local = frontier.front();
        frontier.pop();
        for (const auto u : g.neighbors(s.global_of(local))) {
            const auto lu = s.local_of(u);
            if (lu && !seen[*lu]) {
                seen[*lu] = true;
                ++reached;
                frontier.push(*lu);
            }
        }
    }
    return reached == s.size();
}

VertexSubset load_subset(std::istream& in, const Graph& g) {
    std::vector<VertexId> members;
    for_each_record(in, [&](const std::vector<std::string_view>& tokens, std::size_t line) {
        if (tokens.size() != 1) throw ParseError("expected one vertex id per line", line);
        const auto label = parse_label(tokens[0], line);
        const auto v = g.find(label);
        if (!v) throw ParseError("vertex " + std::to_string(label) + " is not in the graph", line);
        members.push_back(*v);
    });
    return VertexSubset(g.num_vertices(), std::move(members));
}

VertexSubset load_subset(const std::filesystem::path& path, const Graph& g) {
    auto in = open_or_throw(path);
    return load_subset(in, g);
}

}  // namespace localhk
