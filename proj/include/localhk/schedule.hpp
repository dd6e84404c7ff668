#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include "localhk/random.hpp"

namespace localhk {

/// Integration horizon, discretization and sample count for the local
/// solvers:
///   T = s^3 ln(s^3 / gamma),  N = T / gamma,  r = ceil(gamma^-2 ln(s / gamma)).
/// Sampled times are j * gamma (= j T / N) for j uniform on [1, floor(N)].
struct SolverSchedule {
    double gamma = 0.0;
    std::optional<double> epsilon;
    std::size_t s = 0;
    double T = 0.0;
    double N = 0.0;
    std::uint64_t N_floor = 0;
    std::uint64_t r_outer = 0;
    /// Sampled times at or beyond this are skipped under restricted range.
    double t_prime = std::numeric_limits<double>::infinity();
    std::uint64_t master_seed = 0;
};

/// Throws `ScheduleError` unless 0 < gamma < 1, s >= 1 and, when given,
/// gamma <= epsilon < 1. With both lambda1 and epsilon, t_prime is set to
/// restricted_threshold(lambda1, epsilon).
SolverSchedule make_schedule(std::size_t s, double gamma, std::optional<double> epsilon,
                             std::uint64_t master_seed, std::optional<double> lambda1 = std::nullopt);

/// j uniform on [1, floor(N)].
std::uint64_t draw_index(const SolverSchedule& schedule, CounterStream& rng);

/// t = j * gamma for a freshly drawn j, clamped to T.
double draw_t(const SolverSchedule& schedule, CounterStream& rng);

/// Time of grid point j.
double grid_time(const SolverSchedule& schedule, std::uint64_t j);

/// t' = ln(1 / eps) / lambda1.
double restricted_threshold(double lambda1, double epsilon);

}  // namespace localhk
