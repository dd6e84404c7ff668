#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "localhk/error.hpp"
#include "localhk/graph.hpp"

namespace localhk {

/// Sparse real vector over V, keyed by compact vertex id. Stored zeros are
/// allowed but are not part of the support.
using SparseVector = std::map<VertexId, double>;

/// Outcome of the b-boundable check. `delta` and `partial` are filled even
/// when some condition fails.
struct Validation {
    std::vector<Violation> violations;
    std::vector<VertexId> delta;
    std::vector<Edge> partial;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks that S avoids supp(b), that delta(S) meets supp(b), and that S
/// induces a connected subgraph with a nonempty vertex boundary. An all-zero
/// b is reported as condition 0 ("trivial boundary vector").
Validation validate_b_boundable(const Graph& g, const SparseVector& b, const VertexSubset& s);

/// b1(v) = sum over boundary neighbours u of b(u) / sqrt(d_v d_u), with
/// full-graph degrees. Only entries of b on `partial` edges are read.
Eigen::VectorXd compute_b1(const Graph& g, const SparseVector& b, const VertexSubset& s,
                           std::span<const Edge> partial);

/// b2(v) = b1(v) sqrt(d_v).
Eigen::VectorXd compute_b2(const Graph& g, const VertexSubset& s, const Eigen::VectorXd& b1);

/// A graph, boundary vector and b-boundable subset together with the derived
/// local right-hand sides. Holds a non-owning pointer to the graph, which
/// must outlive the problem.
class BoundaryProblem {
public:
    /// Throws `ValidationError` listing every failed condition.
    static BoundaryProblem make(const Graph& g, SparseVector b, VertexSubset s);

    const Graph& graph() const noexcept { return *graph_; }
    const SparseVector& b() const noexcept { return b_; }
    const VertexSubset& subset() const noexcept { return subset_; }
    const std::vector<VertexId>& delta() const noexcept { return delta_; }
    const std::vector<Edge>& partial() const noexcept { return partial_; }
    const Eigen::VectorXd& b1() const noexcept { return b1_; }
    const Eigen::VectorXd& b2() const noexcept { return b2_; }
    std::size_t size() const noexcept { return subset_.size(); }

private:
    BoundaryProblem() = default;

    const Graph* graph_ = nullptr;
    SparseVector b_;
    VertexSubset subset_;
    std::vector<VertexId> delta_;
    std::vector<Edge> partial_;
    Eigen::VectorXd b1_;
    Eigen::VectorXd b2_;
};

/// Reads "vertex_id value" lines. Repeated ids throw.
SparseVector load_boundary(std::istream& in, const Graph& g);
SparseVector load_boundary(const std::filesystem::path& path, const Graph& g);

}  // namespace localhk
