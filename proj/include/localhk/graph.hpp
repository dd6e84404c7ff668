#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace localhk {

/// Compact vertex index in [0, n).
using VertexId = std::uint32_t;
/// Vertex label as it appears in input files.
using OriginalId = std::uint64_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Every vertex carries the label it had in the source file. Labels are
/// compacted to [0, n) in increasing order, so `original_id` is monotone.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on [0, n). Duplicate and reversed edges collapse; a
    /// self-loop or out-of-range endpoint throws. `original_ids`, when given,
    /// must be strictly increasing and of length n; otherwise labels are the
    /// compact ids themselves.
    Graph(std::size_t n, std::vector<Edge> edges, std::vector<OriginalId> original_ids = {});

    std::size_t num_vertices() const noexcept { return original_ids_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    /// Sorted neighbor list.
    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(VertexId v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    bool adjacent(VertexId u, VertexId v) const;

    /// Sorted, normalized edge list.
    std::span<const Edge> edges() const noexcept { return edges_; }

    OriginalId original_id(VertexId v) const { return original_ids_[v]; }
    std::optional<VertexId> find(OriginalId label) const;
    /// Like `find`, but throws `Error` for unknown labels.
    VertexId index_of(OriginalId label) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> adjacency_;
    std::vector<OriginalId> original_ids_;
};

/// Reads a whitespace separated edge list. Lines starting with '#' and blank
/// lines are skipped; ids are arbitrary non-negative integers.
Graph load_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);

/// Writes one "u v" line per edge using original labels. Loading the output
/// reproduces the same adjacency.
void write_edge_list(std::ostream& out, const Graph& g);

/// Validated vertex subset with a local index: members()[i] is local vertex i.
class VertexSubset {
public:
    VertexSubset() = default;
    /// Throws `Error` on duplicates or ids outside [0, n).
    VertexSubset(std::size_t n, std::vector<VertexId> members);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::span<const VertexId> members() const noexcept { return members_; }

    VertexId global_of(std::size_t local) const { return members_[local]; }
    std::optional<std::size_t> local_of(VertexId v) const;
    bool contains(VertexId v) const { return local_of(v).has_value(); }

private:
    std::vector<VertexId> members_;
};

/// { u not in S : u ~ v for some v in S }, sorted.
std::vector<VertexId> vertex_boundary(const Graph& g, const VertexSubset& s);

/// Edges with exactly one endpoint in S, sorted.
std::vector<Edge> edge_boundary(const Graph& g, const VertexSubset& s);

/// True iff the subgraph induced on S is connected. False for empty S.
bool is_connected_induced(const Graph& g, const VertexSubset& s);

/// Reads one vertex label per line ('#' comments allowed).
VertexSubset load_subset(std::istream& in, const Graph& g);
VertexSubset load_subset(const std::filesystem::path& path, const Graph& g);

}  // namespace localhk
