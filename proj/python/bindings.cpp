#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "localhk/boundary.hpp"
#include "localhk/dirichlet.hpp"
#include "localhk/error.hpp"
#include "localhk/graph.hpp"
#include "localhk/schedule.hpp"
#include "localhk/solvers.hpp"
#include "localhk/sweep.hpp"
#include "localhk/walk.hpp"

namespace py = pybind11;
using namespace localhk;

namespace {

// Edges given by arbitrary labels; labels are compacted in sorted order as
// load_graph does.
Graph graph_from_labels(const std::vector<std::pair<OriginalId, OriginalId>>& labeled) {
    std::vector<OriginalId> ids;
    for (const auto& [u, v] : labeled) {
        if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), 0);
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto index = [&](OriginalId x) {
        return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
    };
    std::vector<Edge> edges;
    for (const auto& [u, v] : labeled) edges.push_back(Edge{index(u), index(v)});
    const auto n = ids.size();
    return Graph(n, std::move(edges), std::move(ids));
}

VertexSubset subset_from_labels(const Graph& g, const std::vector<OriginalId>& labels) {
    std::vector<VertexId> members;
    for (auto x : labels) members.push_back(g.index_of(x));
    return VertexSubset(g.num_vertices(), std::move(members));
}

SparseVector sparse_from_labels(const Graph& g, const std::map<OriginalId, double>& values) {
    SparseVector b;
    for (const auto& [x, value] : values) b[g.index_of(x)] = value;
    return b;
}

std::map<OriginalId, double> sparse_to_labels(const Graph& g, const SparseVector& b) {
    std::map<OriginalId, double> out;
    for (const auto& [v, value] : b) out[g.original_id(v)] = value;
    return out;
}

std::vector<OriginalId> subset_labels(const Graph& g, const VertexSubset& s) {
    std::vector<OriginalId> out;
    for (auto v : s.members()) out.push_back(g.original_id(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_localhk, m) {
    m.doc() = "Local Laplacian solver with boundary conditions via Dirichlet heat kernel pagerank";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<CapacityError>(m, "CapacityError", base);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<SingularityError>(m, "SingularityError", base);
    py::register_exception<ScheduleError>(m, "ScheduleError", base);
    py::register_exception<ValidationError>(m, "ValidationError", base);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_labels), py::arg("edges"), "Graph from (u, v) label pairs")
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("labels", [](const Graph& g) {
            std::vector<OriginalId> out;
            for (VertexId v = 0; v < g.num_vertices(); ++v) out.push_back(g.original_id(v));
            return out;
        })
        .def("degree", [](const Graph& g, OriginalId x) { return g.degree(g.index_of(x)); }, py::arg("label"))
        .def("edges", [](const Graph& g) {
            std::vector<std::pair<OriginalId, OriginalId>> out;
            for (const auto& e : g.edges()) out.emplace_back(g.original_id(e.u), g.original_id(e.v));
            return out;
        });

    py::class_<VertexSubset>(m, "VertexSubset")
        .def(py::init(&subset_from_labels), py::arg("graph"), py::arg("labels"))
        .def("__len__", &VertexSubset::size)
        .def("labels", [](const VertexSubset& s, const Graph& g) { return subset_labels(g, s); }, py::arg("graph"));

    m.def("load_graph", py::overload_cast<const std::filesystem::path&>(&load_graph), py::arg("path"));
    m.def("load_subset", py::overload_cast<const std::filesystem::path&, const Graph&>(&load_subset),
          py::arg("path"), py::arg("graph"));
    m.def(
        "load_boundary",
        [](const std::filesystem::path& path, const Graph& g) { return sparse_to_labels(g, load_boundary(path, g)); },
        py::arg("path"), py::arg("graph"), "Boundary vector as {label: value}");

    m.def(
        "validate",
        [](const Graph& g, const std::map<OriginalId, double>& b, const VertexSubset& s) {
            std::vector<std::pair<int, std::string>> out;
            for (const auto& v : validate_b_boundable(g, sparse_from_labels(g, b), s).violations) {
                out.emplace_back(v.condition, v.message);
            }
            return out;
        },
        py::arg("graph"), py::arg("b"), py::arg("subset"), "List of (condition, message); empty when b-boundable");

    py::class_<BoundaryProblem>(m, "BoundaryProblem")
        .def(py::init([](const Graph& g, const std::map<OriginalId, double>& b, const VertexSubset& s) {
                 return BoundaryProblem::make(g, sparse_from_labels(g, b), s);
             }),
             py::arg("graph"), py::arg("b"), py::arg("subset"), py::keep_alive<1, 2>())
        .def_property_readonly("size", &BoundaryProblem::size)
        .def_property_readonly("b1", &BoundaryProblem::b1)
        .def_property_readonly("b2", &BoundaryProblem::b2)
        .def_property_readonly("subset", &BoundaryProblem::subset);

    py::class_<DirichletOperator>(m, "DirichletOperator")
        .def(py::init<const Graph&, const VertexSubset&>(), py::arg("graph"), py::arg("subset"))
        .def_property_readonly("laplacian", &DirichletOperator::laplacian)
        .def_property_readonly("transition", &DirichletOperator::transition)
        .def_property_readonly("eigenvalues", &DirichletOperator::eigenvalues)
        .def_property_readonly("eigenvectors", &DirichletOperator::eigenvectors)
        .def_property_readonly("lambda1", &DirichletOperator::lambda1)
        .def("greens_function", [](const DirichletOperator& op) { return GreensFunction(op).matrix(); });

    m.def("exact_dirhkpr", &exact_dirhkpr, py::arg("op"), py::arg("t"), py::arg("f"));
    m.def("exact_local_solution",
          py::overload_cast<const BoundaryProblem&, const DirichletOperator&>(&exact_local_solution),
          py::arg("problem"), py::arg("op"));

    py::class_<WalkCounters>(m, "WalkCounters")
        .def_readonly("walks_started", &WalkCounters::walks_started)
        .def_readonly("steps_simulated", &WalkCounters::steps_simulated)
        .def_readonly("aborts", &WalkCounters::aborts);

    m.def(
        "approx_dirhkpr",
        [](const Graph& g, const VertexSubset& s, double t, const Eigen::VectorXd& f, double eps, std::uint64_t seed,
           unsigned workers, double constant) {
            auto est = approx_dirhkpr(g, s, t, f, eps, seed, workers, constant);
            return py::make_tuple(est.rho, est.counters);
        },
        py::arg("graph"), py::arg("subset"), py::arg("t"), py::arg("f"), py::arg("epsilon"), py::arg("seed"),
        py::arg("workers") = 1, py::arg("constant") = kDefaultWalkConstant, "Returns (rho, counters)");

    py::class_<SolverSchedule>(m, "SolverSchedule")
        .def_readonly("gamma", &SolverSchedule::gamma)
        .def_readonly("epsilon", &SolverSchedule::epsilon)
        .def_readonly("s", &SolverSchedule::s)
        .def_readonly("T", &SolverSchedule::T)
        .def_readonly("N", &SolverSchedule::N)
        .def_readonly("N_floor", &SolverSchedule::N_floor)
        .def_readonly("r_outer", &SolverSchedule::r_outer)
        .def_readonly("t_prime", &SolverSchedule::t_prime)
        .def_readonly("seed", &SolverSchedule::master_seed);

    m.def("make_schedule", &make_schedule, py::arg("s"), py::arg("gamma"), py::arg("epsilon") = std::nullopt,
          py::arg("seed") = 0, py::arg("lambda1") = std::nullopt);

    py::class_<SolveReport>(m, "SolveReport")
        .def_readonly("x_hat", &SolveReport::x_hat)
        .def_readonly("sampled_ts", &SolveReport::sampled_ts)
        .def_readonly("walk_steps_total", &SolveReport::walk_steps_total)
        .def_readonly("counters", &SolveReport::counters)
        .def_readonly("skipped_samples", &SolveReport::skipped_samples)
        .def_readonly("elapsed_seconds", &SolveReport::elapsed_seconds)
        .def_readonly("schedule", &SolveReport::schedule);

    m.def("local_linear_solver", &local_linear_solver, py::arg("problem"), py::arg("op"), py::arg("schedule"),
          py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "greens_solver",
        [](const BoundaryProblem& p, const SolverSchedule& sch, unsigned workers, bool restricted, double constant) {
            SolverOptions options;
            options.workers = workers;
            options.restricted_range = restricted;
            options.walk_constant = constant;
            py::gil_scoped_release release;
            return greens_solver(p, sch, options);
        },
        py::arg("problem"), py::arg("schedule"), py::arg("workers") = 1, py::arg("restricted_range") = false,
        py::arg("walk_constant") = kDefaultWalkConstant);
    m.def(
        "riemann_sum_solution",
        [](const BoundaryProblem& p, const DirichletOperator& op, const SolverSchedule& sch) {
            return riemann_sum_solution(p, op, sch);
        },
        py::arg("problem"), py::arg("op"), py::arg("schedule"));
    m.def(
        "error_bound",
        [](const SolveReport& report, const BoundaryProblem& p, const DirichletOperator& op) {
            const auto c = check_against_oracle(report, p, op);
            py::dict d;
            d["error"] = c.error;
            d["x_exact_norm2"] = c.x_exact_norm;
            d["x_rie_norm2"] = c.x_rie_norm;
            d["local_bound"] = c.bounds.local_bound;
            d["greens_bound"] = c.bounds.greens_bound;
            return d;
        },
        py::arg("report"), py::arg("problem"), py::arg("op"));
    m.def("estimate_lambda1", &estimate_lambda1, py::arg("graph"), py::arg("subset"),
          py::arg("max_iterations") = 200000, py::arg("tolerance") = 1e-13);

    m.def(
        "sweep_norms",
        [](const DirichletOperator& op, const Eigen::VectorXd& f, double t_max, std::size_t points) {
            py::dict out;
            std::vector<double> t, l1, mx, l1p, l1m, mxp, mxm;
            for (const auto& r : sweep_norms(op, f, t_max, points)) {
                t.push_back(r.t);
                l1.push_back(r.l1);
                mx.push_back(r.max_abs);
                l1p.push_back(r.l1_plus);
                l1m.push_back(r.l1_minus);
                mxp.push_back(r.max_plus);
                mxm.push_back(r.max_minus);
            }
            out["t"] = t;
            out["l1"] = l1;
            out["max_abs"] = mx;
            out["l1_plus"] = l1p;
            out["l1_minus"] = l1m;
            out["max_plus"] = mxp;
            out["max_minus"] = mxm;
            return out;
        },
        py::arg("op"), py::arg("f"), py::arg("t_max"), py::arg("points") = 200, "Columns as a dict of lists");
}
