#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "localhk/error.hpp"
#include "localhk/graph.hpp"
#include "localhk/random.hpp"

namespace localhk {

/// How Poisson walk lengths are truncated.
enum class CapMode {
    eps_cap,    ///< k <= floor(t / eps)
    two_t_cap,  ///< k <= floor(2 t)
    uncapped,   ///< no truncation; for bias checks only
};

/// Default multiplier in r = ceil(C / eps^3 * ln n).
inline constexpr double kDefaultWalkConstant = 16.0;

struct WalkConfig {
    double t = 0.0;
    double epsilon = 0.1;
    CapMode cap_mode = CapMode::eps_cap;
    std::uint64_t sample_count = 1;
    std::uint64_t master_seed = 0;

    /// Sample count from (eps, n): r = ceil(constant / eps^3 * ln n), at least 1.
    static WalkConfig make(double t, double epsilon, std::size_t n, CapMode cap_mode,
                           std::uint64_t master_seed, double constant = kDefaultWalkConstant);

    /// Largest walk length allowed under `cap_mode`.
    std::uint64_t cap() const;
};

/// f = plus - minus with disjoint supports.
struct SignedSplit {
    Eigen::VectorXd plus;
    Eigen::VectorXd minus;
    double norm_plus = 0.0;
    double norm_minus = 0.0;

    static SignedSplit of(const Eigen::VectorXd& f);
};

struct WalkCounters {
    std::uint64_t walks_started = 0;
    std::uint64_t steps_simulated = 0;
    std::uint64_t aborts = 0;

    WalkCounters& operator+=(const WalkCounters& o) noexcept {
        walks_started += o.walks_started;
        steps_simulated += o.steps_simulated;
        aborts += o.aborts;
        return *this;
    }
};

struct HkprEstimate {
    Eigen::VectorXd rho;
    WalkCounters counters;
};

/// Poisson(t) variate; 0 when t == 0.
template <class Rng>
std::uint64_t sample_poisson(double t, Rng& rng) {
    if (!(t >= 0.0)) throw DomainError("Poisson mean must be non-negative");
    if (t == 0.0) return 0;
    std::poisson_distribution<long long> dist(t);
    return static_cast<std::uint64_t>(dist(rng));
}

/// k steps of the walk P = D^{-1} A from `start`, stopped as soon as it steps
/// outside S. Returns the final vertex, or nullopt if the walk left S.
std::optional<VertexId> dirichlet_walk(const Graph& g, const VertexSubset& s, VertexId start,
                                       std::uint64_t k, CounterStream& rng,
                                       WalkCounters* counters = nullptr);

/// Monte-Carlo estimate of f^T exp(-t Delta_S) with `cfg.sample_count`
/// rounds. Each round draws one walk from f+/|f+|_1 (scored +|f+|_1 at its
/// endpoint) and one from f-/|f-|_1 (scored -|f-|_1); the total is divided by
/// the round count. Round i uses its own substreams, so the result is
/// bit-identical for any `workers`. Throws `DomainError` for an all-zero f.
HkprEstimate estimate_dirhkpr(const Graph& g, const VertexSubset& s, const Eigen::VectorXd& f,
                              const WalkConfig& cfg, unsigned workers = 1);

/// Walk lengths capped at floor(t / eps).
HkprEstimate approx_dirhkpr(const Graph& g, const VertexSubset& s, double t, const Eigen::VectorXd& f,
                            double epsilon, std::uint64_t master_seed, unsigned workers = 1,
                            double constant = kDefaultWalkConstant);

/// Walk lengths capped at floor(2 t); the variant used inside the Green's
/// solver.
HkprEstimate solver_approx_dirhkpr(const Graph& g, const VertexSubset& s, double t,
                                   const Eigen::VectorXd& f, double epsilon, std::uint64_t master_seed,
                                   unsigned workers = 1, double constant = kDefaultWalkConstant);

}  // namespace localhk
