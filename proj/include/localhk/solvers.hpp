#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "localhk/boundary.hpp"
#include "localhk/dirichlet.hpp"
#include "localhk/schedule.hpp"
#include "localhk/walk.hpp"

namespace localhk {

/// Norms that enter the error bounds.
struct BoundTerms {
    double b1_norm2 = 0.0;
    double b2_norm1 = 0.0;
    double gamma = 0.0;
    double epsilon = 0.0;
};

struct SolveReport {
    Eigen::VectorXd x_hat;
    /// One entry per outer sample, in sample order.
    std::vector<double> sampled_ts;
    std::uint64_t walk_steps_total = 0;
    WalkCounters counters;
    std::uint64_t skipped_samples = 0;
    double elapsed_seconds = 0.0;
    BoundTerms bound_terms;
    SolverSchedule schedule;
    bool restricted_range = false;
};

struct SolverOptions {
    unsigned workers = 1;
    /// Skip samples with t >= schedule.t_prime.
    bool restricted_range = false;
    double walk_constant = kDefaultWalkConstant;
    /// two_t_cap is the solver variant; uncapped exists for bias tests.
    CapMode cap_mode = CapMode::two_t_cap;
};

/// One outer sample: the drawn grid index, its time and the pagerank vector.
struct SolverSample {
    std::uint64_t j = 0;
    double t = 0.0;
    Eigen::VectorXd rho;
    WalkCounters counters;
    bool skipped = false;
};

/// Sample i of the exact-backend solver: rho = exact pagerank of b2 at a
/// time drawn from substream (seed, draw_t, i).
SolverSample local_linear_sample(const BoundaryProblem& problem, const DirichletOperator& op,
                                 const SolverSchedule& schedule, std::uint64_t i);

/// Sample i of the Monte-Carlo solver. Draws the same time as
/// local_linear_sample for the same (seed, i).
SolverSample greens_sample(const BoundaryProblem& problem, const SolverSchedule& schedule,
                           const SolverOptions& options, std::uint64_t i);

/// Averages r_outer exact pagerank samples: (T / r) sum_i rho_i D^{-1/2}.
SolveReport local_linear_solver(const BoundaryProblem& problem, const DirichletOperator& op,
                                const SolverSchedule& schedule, unsigned workers = 1);

/// Same estimator with Monte-Carlo pagerank samples. Requires an epsilon in
/// the schedule.
SolveReport greens_solver(const BoundaryProblem& problem, const SolverSchedule& schedule,
                          const SolverOptions& options = {});

enum class RiemannMethod {
    /// Per-eigenvalue geometric series, O(s^3).
    closed_form,
    /// Explicit sum over all floor(N) grid points per eigenvalue, O(N s).
    direct,
};

/// Right Riemann sum gamma * sum_{j=1}^{floor N} exp(-j gamma L_S) b1, which
/// equals sum_j rho(j T/N, b2) (T/N) D^{-1/2}.
Eigen::VectorXd riemann_sum_solution(const BoundaryProblem& problem, const DirichletOperator& op,
                                     const SolverSchedule& schedule,
                                     RiemannMethod method = RiemannMethod::closed_form);

struct ErrorBounds {
    double local_bound = 0.0;   ///< gamma (|b1| + |x_S| + |x_rie|)
    double greens_bound = 0.0;  ///< local_bound + eps |b2|_1
};

ErrorBounds error_bound(const BoundTerms& terms, double x_exact_norm, double x_rie_norm);

/// Comparison of a solver run against the exact solution.
struct OracleCheck {
    double x_exact_norm = 0.0;
    double x_rie_norm = 0.0;
    double error = 0.0;
    ErrorBounds bounds;
    bool within_local_bound = false;
    bool within_greens_bound = false;
};

OracleCheck check_against_oracle(const SolveReport& report, const BoundaryProblem& problem,
                                 const DirichletOperator& op);

/// Smallest Dirichlet eigenvalue by power iteration on I - L_S / 2, using
/// sparse products only. An estimate for subsets too large for the dense path.
double estimate_lambda1(const Graph& g, const VertexSubset& s, std::size_t max_iterations = 200000,
                        double tolerance = 1e-13);

}  // namespace localhk
