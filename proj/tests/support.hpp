#pragma once

// Fixtures, random instance generators and independent oracles for the tests.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "localhk/boundary.hpp"
#include "localhk/graph.hpp"

namespace testing {

using namespace localhk;

inline std::filesystem::path data_path(const std::string& name) {
    return std::filesystem::path(LOCALHK_DATA_DIR) / name;
}

inline Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    return load_graph(in);
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

inline Graph p4() { return path_graph(4); }
inline Graph p3() { return path_graph(3); }

/// A random problem: connected graph, connected S with nonempty boundary and a
/// b supported on part of delta(S) (sometimes with extra far-away support).
struct Instance {
    Graph graph;
    VertexSubset subset;
    SparseVector b;
};

/// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        edges.push_back({order[pick(rng)], order[i]});
    }
    std::bernoulli_distribution extra(p);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (extra(rng)) edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

/// First k vertices of a BFS from `root`: always connected.
inline std::vector<VertexId> bfs_prefix(const Graph& g, VertexId root, std::size_t k) {
    std::vector<VertexId> out;
    std::vector<bool> seen(g.num_vertices(), false);
    std::queue<VertexId> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty() && out.size() < k) {
        const auto v = q.front();
        q.pop();
        out.push_back(v);
        for (auto u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                q.push(u);
            }
        }
    }
    return out;
}

inline Instance random_instance(std::mt19937_64& rng, std::size_t n_min, std::size_t n_max,
                                std::size_t s_max = 1000) {
    std::uniform_int_distribution<std::size_t> pick_n(n_min, n_max);
    const auto n = pick_n(rng);
    std::uniform_real_distribution<double> pick_p(0.0, 0.5);
    auto g = random_connected_graph(n, pick_p(rng), rng);
    std::uniform_int_distribution<std::size_t> pick_s(1, std::min(n - 1, s_max));
    std::uniform_int_distribution<VertexId> pick_root(0, static_cast<VertexId>(n - 1));
    auto members = bfs_prefix(g, pick_root(rng), pick_s(rng));
    VertexSubset s(n, members);
    const auto delta = vertex_boundary(g, s);

    SparseVector b;
    std::uniform_real_distribution<double> value(-2.0, 2.0);
    std::bernoulli_distribution keep(0.6);
    for (auto u : delta) {
        if (keep(rng)) b[u] = value(rng);
    }
    if (b.empty()) b[delta.front()] = 1.0 + std::abs(value(rng));
    // Occasionally put mass outside S and delta(S) as well.
    for (VertexId v = 0; v < n; ++v) {
        if (!s.contains(v) && !std::binary_search(delta.begin(), delta.end(), v) && keep(rng)) b[v] = value(rng);
    }
    return {std::move(g), std::move(s), std::move(b)};
}

/// Direct dense solve of the harmonic system: for v in S,
///   x(v) - sum_{u~v, u in S} x(u)/sqrt(d_v d_u) = sum_{u~v, u not in S} b(u)/sqrt(d_v d_u),
/// assembled from the edge list alone.
inline Eigen::VectorXd harmonic_oracle(const Graph& g, const SparseVector& b, const VertexSubset& s) {
    const auto n = static_cast<Eigen::Index>(s.size());
    std::vector<double> deg(g.num_vertices(), 0.0);
    for (const auto& e : g.edges()) {
        deg[e.u] += 1.0;
        deg[e.v] += 1.0;
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    auto index = [&](VertexId v) -> Eigen::Index {
        const auto members = s.members();
        const auto it = std::find(members.begin(), members.end(), v);
        return it == members.end() ? -1 : static_cast<Eigen::Index>(it - members.begin());
    };
    for (const auto& e : g.edges()) {
        const double w = 1.0 / std::sqrt(deg[e.u] * deg[e.v]);
        const auto iu = index(e.u);
        const auto iv = index(e.v);
        if (iu >= 0 && iv >= 0) {
            m(iu, iv) -= w;
            m(iv, iu) -= w;
        } else if (iu >= 0) {
            if (auto it = b.find(e.v); it != b.end()) rhs[iu] += it->second * w;
        } else if (iv >= 0) {
            if (auto it = b.find(e.u); it != b.end()) rhs[iv] += it->second * w;
        }
    }
    return m.fullPivLu().solve(rhs);
}

/// exp(-t A) for symmetric A by scaling and squaring a Taylor series.
inline Eigen::MatrixXd expm_taylor(const Eigen::MatrixXd& a, double t) {
    const double norm = (t * a).cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm / std::pow(2.0, squarings) > 0.5) ++squarings;
    const Eigen::MatrixXd x = (-t / std::pow(2.0, squarings)) * a;
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * x / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

template <class T>
T median(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    const auto mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / T(2);
}

}  // namespace testing
