#include "localhk/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "localhk/error.hpp"

namespace localhk {

SolverSchedule make_schedule(std::size_t s, double gamma, std::optional<double> epsilon,
                             std::uint64_t master_seed, std::optional<double> lambda1) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw ScheduleError("gamma must lie in (0, 1)");
    if (s == 0) throw ScheduleError("subset size must be positive");
    if (epsilon) {
        if (!(*epsilon < 1.0)) throw ScheduleError("epsilon must be below 1");
        if (!(*epsilon >= gamma)) {
            throw ScheduleError("epsilon (" + std::to_string(*epsilon) + ") must be at least gamma (" +
                                std::to_string(gamma) +
                                ") for the approximate pagerank samples to meet their guarantee");
        }
    }

    SolverSchedule sch;
    sch.gamma = gamma;
    sch.epsilon = epsilon;
    sch.s = s;
    sch.master_seed = master_seed;
    const double s3 = std::pow(static_cast<double>(s), 3.0);
    sch.T = s3 * std::log(s3 / gamma);
    sch.N = sch.T / gamma;
    sch.N_floor = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(sch.N)));
    sch.r_outer = static_cast<std::uint64_t>(
        std::ceil(std::log(static_cast<double>(s) / gamma) / (gamma * gamma)));
    sch.r_outer = std::max<std::uint64_t>(1, sch.r_outer);
    if (lambda1 && epsilon) sch.t_prime = restricted_threshold(*lambda1, *epsilon);
    return sch;
}

std::uint64_t draw_index(const SolverSchedule& schedule, CounterStream& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(1, schedule.N_floor);
    return pick(rng);
}

double grid_time(const SolverSchedule& schedule, std::uint64_t j) {
    return std::min(static_cast<double>(j) * schedule.gamma, schedule.T);
}

double draw_t(const SolverSchedule& schedule, CounterStream& rng) {
    return grid_time(schedule, draw_index(schedule, rng));
}

double restricted_threshold(double lambda1, double epsilon) {
    if (!(lambda1 > 0.0)) throw DomainError("lambda_1 must be positive");
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must lie in (0, 1]");
    return std::log(1.0 / epsilon) / lambda1;
}

}  // namespace localhk
