#include "localhk/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <string>

#include "text_io.hpp"

namespace localhk {

namespace {

bool in_support(const SparseVector& b, VertexId v) {
    const auto it = b.find(v);
    return it != b.end() && it->second != 0.0;
}

}  // namespace

Validation validate_b_boundable(const Graph& g, const SparseVector& b, const VertexSubset& s) {
    Validation result;
    result.delta = vertex_boundary(g, s);
    result.partial = edge_boundary(g, s);

    const bool trivial = std::none_of(b.begin(), b.end(), [](const auto& kv) { return kv.second != 0.0; });
    if (trivial) {
        result.violations.push_back({0, "trivial boundary vector"});
    }

    for (const auto v : s.members()) {
        if (in_support(b, v)) {
            result.violations.push_back(
                {1, "violation (i): vertex " + std::to_string(g.original_id(v)) +
                        " is in S and in the support of b"});
            break;
        }
    }

    if (!trivial) {
        const bool touches = std::any_of(result.delta.begin(), result.delta.end(),
                                         [&](VertexId u) { return in_support(b, u); });
        if (!touches) {
            result.violations.push_back(
                {2, "violation (ii): the vertex boundary of S does not meet the support of b"});
        }
    }

    if (!is_connected_induced(g, s)) {
        result.violations.push_back({3, "violation (iii): the induced subgraph on S is not connected"});
    } else if (result.delta.empty()) {
        result.violations.push_back({3, "violation (iii): S has an empty vertex boundary"});
    }
    return result;
}

Eigen::VectorXd compute_b1(const Graph& g, const SparseVector& b, const VertexSubset& s,
                           std::span<const Edge> partial) {
    Eigen::VectorXd b1 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(s.size()));
    for (const auto& e : partial) {
        const auto lu = s.local_of(e.u);
        const VertexId inside = lu ? e.u : e.v;
        const VertexId outside = lu ? e.v : e.u;
        const auto it = b.find(outside);
        if (it == b.end() || it->second == 0.0) continue;
        const double scale = std::sqrt(static_cast<double>(g.degree(inside)) * g.degree(outside));
        b1[static_cast<Eigen::Index>(*s.local_of(inside))] += it->second / scale;
    }
    return b1;
}

Eigen::VectorXd compute_b2(const Graph& g, const VertexSubset& s, const Eigen::VectorXd& b1) {
    Eigen::VectorXd b2(b1.size());
    for (Eigen::Index i = 0; i < b1.size(); ++i) {
        b2[i] = b1[i] * std::sqrt(static_cast<double>(g.degree(s.global_of(static_cast<std::size_t>(i)))));
    }
    return b2;
}

BoundaryProblem BoundaryProblem::make(const Graph& g, SparseVector b, VertexSubset s) {
    auto validation = validate_b_boundable(g, b, s);
    if (!validation.ok()) throw ValidationError(std::move(validation.violations));

    BoundaryProblem p;
    p.graph_ = &g;
    p.b1_ = compute_b1(g, b, s, validation.partial);
    p.b2_ = compute_b2(g, s, p.b1_);
    p.b_ = std::move(b);
    p.subset_ = std::move(s);
    p.delta_ = std::move(validation.delta);
    p.partial_ = std::move(validation.partial);
    return p;
}

SparseVector load_boundary(std::istream& in, const Graph& g) {
    SparseVector b;
    detail::for_each_record(in, [&](const std::vector<std::string_view>& tokens, std::size_t line) {
        if (tokens.size() != 2) throw ParseError("expected 'vertex_id value'", line);
        const auto label = detail::parse_label(tokens[0], line);
        const double value = detail::parse_real(tokens[1], line);
        const auto v = g.find(label);
        if (!v) throw ParseError("vertex " + std::to_string(label) + " is not in the graph", line);
        if (!std::isfinite(value)) throw ParseError("boundary value must be finite", line);
        if (!b.emplace(*v, value).second) {
            throw ParseError("vertex " + std::to_string(label) + " listed twice", line);
        }
    });
    return b;
}

SparseVector load_boundary(const std::filesystem::path& path, const Graph& g) {
    auto in = detail::open_or_throw(path);
    return load_boundary(in, g);
}

}  // namespace localhk
