#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "localhk/boundary.hpp"
#include "localhk/solvers.hpp"
#include "localhk/sweep.hpp"

namespace localhk {

inline constexpr int kFormatVersion = 1;

using Json = nlohmann::ordered_json;

/// [{"vertex": original id, "value": x}] in local index order.
Json vector_entries_json(const Graph& g, const VertexSubset& s, const Eigen::VectorXd& x);

Json schedule_json(const SolverSchedule& schedule, bool restricted_range);

/// Full solver report. `oracle` adds the exact norms, the error and the
/// pass/fail marks of the bound checks.
Json solve_report_json(const std::string& command, const SolveReport& report, const BoundaryProblem& problem,
                       const std::optional<OracleCheck>& oracle);

/// Report for the exact solution x_S = G b1.
Json exact_report_json(const BoundaryProblem& problem, const DirichletOperator& op, const Eigen::VectorXd& x);

struct VectorEntry {
    OriginalId vertex = 0;
    double value = 0.0;
};

/// "# format_version=1", then "vertex,value" and one row per entry.
void write_vector_csv(std::ostream& out, const Graph& g, const VertexSubset& s, const Eigen::VectorXd& x);
std::vector<VectorEntry> read_vector_csv(std::istream& in);

/// "# format_version=1", then "t,l1,max_abs,l1_plus,l1_minus,max_plus,max_minus".
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

/// %.17g
std::string format_real(double x);

}  // namespace localhk
