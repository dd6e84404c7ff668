#include "localhk/solvers.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <vector>

#include "localhk/error.hpp"
#include "localhk/parallel.hpp"

namespace localhk {

namespace {

// Above this many (grid point, eigenvalue) terms the direct Riemann sum refuses.
constexpr double kMaxDirectRiemannTerms = 5e9;

BoundTerms bound_terms_of(const BoundaryProblem& problem, const SolverSchedule& schedule) {
    BoundTerms terms;
    terms.b1_norm2 = problem.b1().norm();
    terms.b2_norm1 = problem.b2().lpNorm<1>();
    terms.gamma = schedule.gamma;
    terms.epsilon = schedule.epsilon.value_or(0.0);
    return terms;
}

void check_schedule(const BoundaryProblem& problem, const SolverSchedule& schedule) {
    if (schedule.s != problem.size()) throw ScheduleError("schedule was built for a different subset size");
    if (schedule.N_floor == 0 || schedule.r_outer == 0) throw ScheduleError("schedule is empty");
}

std::uint64_t draw_sample_index(const SolverSchedule& schedule, std::uint64_t i) {
    auto rng = substream(schedule.master_seed, StreamPhase::draw_t, i);
    return draw_index(schedule, rng);
}

// Runs `sample(i)` for every outer sample and sums the results in index order.
template <class SampleFn>
SolveReport run_samples(const BoundaryProblem& problem, const SolverSchedule& schedule, unsigned workers,
                        SampleFn&& sample) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = schedule.r_outer;
    std::vector<SolverSample> samples(r);
    parallel_blocks(r, workers, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) samples[i] = sample(i);
    });

    SolveReport report;
    report.schedule = schedule;
    report.bound_terms = bound_terms_of(problem, schedule);
    report.sampled_ts.reserve(r);
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(problem.size()));
    for (const auto& smp : samples) {
        report.sampled_ts.push_back(smp.t);
        report.counters += smp.counters;
        if (smp.skipped) {
            ++report.skipped_samples;
            continue;
        }
        sum += smp.rho;
    }
    report.walk_steps_total = report.counters.steps_simulated;

    Eigen::VectorXd inv_sqrt(static_cast<Eigen::Index>(problem.size()));
    for (std::size_t v = 0; v < problem.size(); ++v) {
        inv_sqrt[static_cast<Eigen::Index>(v)] =
            1.0 / std::sqrt(static_cast<double>(problem.graph().degree(problem.subset().global_of(v))));
    }
    report.x_hat = (schedule.T / static_cast<double>(r)) * sum.cwiseProduct(inv_sqrt);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

SolverSample local_linear_sample(const BoundaryProblem& problem, const DirichletOperator& op,
                                 const SolverSchedule& schedule, std::uint64_t i) {
    SolverSample smp;
    smp.j = draw_sample_index(schedule, i);
    smp.t = grid_time(schedule, smp.j);
    smp.rho = exact_dirhkpr(op, smp.t, problem.b2());
    return smp;
}

SolverSample greens_sample(const BoundaryProblem& problem, const SolverSchedule& schedule,
                           const SolverOptions& options, std::uint64_t i) {
    if (!schedule.epsilon) throw ScheduleError("the Monte-Carlo solver needs an epsilon");
    SolverSample smp;
    smp.j = draw_sample_index(schedule, i);
    smp.t = grid_time(schedule, smp.j);
    if (options.restricted_range && smp.t >= schedule.t_prime) {
        smp.skipped = true;
        return smp;
    }
    const auto& b2 = problem.b2();
    if (b2.isZero(0.0)) {
        smp.rho = Eigen::VectorXd::Zero(b2.size());
        return smp;
    }
    const auto cfg = WalkConfig::make(smp.t, *schedule.epsilon, problem.graph().num_vertices(), options.cap_mode,
                                      derive_seed(schedule.master_seed, StreamPhase::sample_seed, i),
                                      options.walk_constant);
    auto est = estimate_dirhkpr(problem.graph(), problem.subset(), b2, cfg, 1);
    smp.rho = std::move(est.rho);
    smp.counters = est.counters;
    return smp;
}

SolveReport local_linear_solver(const BoundaryProblem& problem, const DirichletOperator& op,
                                const SolverSchedule& schedule, unsigned workers) {
    check_schedule(problem, schedule);
    if (op.size() != problem.size()) throw Error("operator does not match the problem subset");
    return run_samples(problem, schedule, workers,
                       [&](std::uint64_t i) { return local_linear_sample(problem, op, schedule, i); });
}

SolveReport greens_solver(const BoundaryProblem& problem, const SolverSchedule& schedule,
                          const SolverOptions& options) {
    check_schedule(problem, schedule);
    if (!schedule.epsilon) throw ScheduleError("the Monte-Carlo solver needs an epsilon");
    if (options.restricted_range && !std::isfinite(schedule.t_prime)) {
        throw ScheduleError("restricted range needs lambda_1 in the schedule");
    }
    auto report = run_samples(problem, schedule, options.workers, [&](std::uint64_t i) {
        return greens_sample(problem, schedule, options, i);
    });
    report.restricted_range = options.restricted_range;
    return report;
}

Eigen::VectorXd riemann_sum_solution(const BoundaryProblem& problem, const DirichletOperator& op,
                                     const SolverSchedule& schedule, RiemannMethod method) {
    check_schedule(problem, schedule);
    if (op.size() != problem.size()) throw Error("operator does not match the problem subset");
    const auto& lambda = op.eigenvalues();
    const double h = schedule.gamma;
    const auto M = schedule.N_floor;
    Eigen::VectorXd weights(lambda.size());

    if (method == RiemannMethod::closed_form) {
        for (Eigen::Index i = 0; i < lambda.size(); ++i) {
            const double a = lambda[i] * h;
            // h q (1 - q^M) / (1 - q) with q = exp(-a)
            const double one_minus_q = -std::expm1(-a);
            const double one_minus_qM = -std::expm1(-a * static_cast<double>(M));
            weights[i] = h * std::exp(-a) * one_minus_qM / one_minus_q;
        }
    } else {
        if (static_cast<double>(M) * static_cast<double>(lambda.size()) > kMaxDirectRiemannTerms) {
            throw CapacityError("direct Riemann sum over " + std::to_string(M) +
                                " grid points is too large; use the closed form");
        }
        for (Eigen::Index i = 0; i < lambda.size(); ++i) {
            double acc = 0.0;
            for (std::uint64_t j = 1; j <= M; ++j) acc += std::exp(-lambda[i] * grid_time(schedule, j));
            weights[i] = h * acc;
        }
    }
    return op.spectral_apply(weights, problem.b1());
}

ErrorBounds error_bound(const BoundTerms& terms, double x_exact_norm, double x_rie_norm) {
    ErrorBounds out;
    out.local_bound = terms.gamma * (terms.b1_norm2 + x_exact_norm + x_rie_norm);
    out.greens_bound = out.local_bound + terms.epsilon * terms.b2_norm1;
    return out;
}

OracleCheck check_against_oracle(const SolveReport& report, const BoundaryProblem& problem,
                                 const DirichletOperator& op) {
    OracleCheck out;
    const auto x_exact = exact_local_solution(problem, op);
    const auto x_rie = riemann_sum_solution(problem, op, report.schedule);
    out.x_exact_norm = x_exact.norm();
    out.x_rie_norm = x_rie.norm();
    out.error = (report.x_hat - x_exact).norm();
    out.bounds = error_bound(report.bound_terms, out.x_exact_norm, out.x_rie_norm);
    out.within_local_bound = out.error <= out.bounds.local_bound;
    out.within_greens_bound = out.error <= out.bounds.greens_bound;
    return out;
}

double estimate_lambda1(const Graph& g, const VertexSubset& s, std::size_t max_iterations, double tolerance) {
    if (s.empty()) throw Error("empty subset");
    const auto n = static_cast<Eigen::Index>(s.size());

    // Off-diagonal entries of L_S as (row, col, value) in local indices.
    struct Entry {
        Eigen::Index row, col;
        double value;
    };
    std::vector<Entry> off;
    Eigen::VectorXd sqrt_deg(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto v = s.global_of(static_cast<std::size_t>(i));
        sqrt_deg[i] = std::sqrt(static_cast<double>(g.degree(v)));
        if (g.degree(v) == 0) throw Error("subset contains an isolated vertex");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (const auto u : g.neighbors(s.global_of(static_cast<std::size_t>(i)))) {
            if (const auto j = s.local_of(u)) {
                const auto jj = static_cast<Eigen::Index>(*j);
                off.push_back({i, jj, -1.0 / (sqrt_deg[i] * sqrt_deg[jj])});
            }
        }
    }

    // Power iteration on I - L_S / 2, whose spectrum lies in [0, 1).
    Eigen::VectorXd v = sqrt_deg.normalized();
    double mu = 0.0;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        Eigen::VectorXd w = 0.5 * v;
        for (const auto& e : off) w[e.row] -= 0.5 * e.value * v[e.col];
        const double next = v.dot(w);
        const double len = w.norm();
        if (len == 0.0) return 2.0;
        v = w / len;
        if (it > 0 && std::abs(next - mu) <= tolerance) {
            mu = next;
            break;
        }
        mu = next;
    }
    return 2.0 * (1.0 - mu);
}

}  // namespace localhk
