#include "localhk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "localhk/parallel.hpp"

namespace localhk {

WalkConfig WalkConfig::make(double t, double epsilon, std::size_t n, CapMode cap_mode,
                            std::uint64_t master_seed, double constant) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be finite and non-negative");
    if (!(constant > 0.0)) throw DomainError("walk constant must be positive");
    if (n == 0) throw DomainError("graph has no vertices");

    WalkConfig cfg;
    cfg.t = t;
    cfg.epsilon = epsilon;
    cfg.cap_mode = cap_mode;
    cfg.master_seed = master_seed;
    const double r = std::ceil(constant / (epsilon * epsilon * epsilon) * std::log(static_cast<double>(n)));
    cfg.sample_count = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(r));
    return cfg;
}

std::uint64_t WalkConfig::cap() const {
    switch (cap_mode) {
        case CapMode::eps_cap:
            return static_cast<std::uint64_t>(std::floor(t / epsilon));
        case CapMode::two_t_cap:
            return static_cast<std::uint64_t>(std::floor(2.0 * t));
        case CapMode::uncapped:
            break;
    }
    return std::numeric_limits<std::uint64_t>::max();
}

SignedSplit SignedSplit::of(const Eigen::VectorXd& f) {
    SignedSplit split;
    split.plus = f.cwiseMax(0.0);
    split.minus = (-f).cwiseMax(0.0);
    split.norm_plus = split.plus.sum();
    split.norm_minus = split.minus.sum();
    return split;
}

std::optional<VertexId> dirichlet_walk(const Graph& g, const VertexSubset& s, VertexId start,
                                       std::uint64_t k, CounterStream& rng, WalkCounters* counters) {
    if (!s.contains(start)) throw std::invalid_argument("walk must start inside the subset");
    VertexId at = start;
    for (std::uint64_t step = 0; step < k; ++step) {
        const auto nb = g.neighbors(at);
        if (nb.empty()) throw Error("walk reached an isolated vertex");
        std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
        at = nb[pick(rng)];
        if (counters) ++counters->steps_simulated;
        if (!s.contains(at)) {
            if (counters) ++counters->aborts;
            return std::nullopt;
        }
    }
    return at;
}

namespace {

struct Tally {
    std::vector<std::uint64_t> plus_hits;
    std::vector<std::uint64_t> minus_hits;
    WalkCounters counters;
};

void one_walk(const Graph& g, const VertexSubset& s, const WalkConfig& cfg,
              std::discrete_distribution<std::size_t>& start_dist, CounterStream rng,
              std::vector<std::uint64_t>& hits, WalkCounters& counters) {
    const auto start = s.global_of(start_dist(rng));
    const auto k = std::min(sample_poisson(cfg.t, rng), cfg.cap());
    ++counters.walks_started;
    if (const auto end = dirichlet_walk(g, s, start, k, rng, &counters)) ++hits[*s.local_of(*end)];
}

std::discrete_distribution<std::size_t> distribution_of(const Eigen::VectorXd& weights) {
    std::vector<double> w(weights.data(), weights.data() + weights.size());
    return std::discrete_distribution<std::size_t>(w.begin(), w.end());
}

}  // namespace

HkprEstimate estimate_dirhkpr(const Graph& g, const VertexSubset& s, const Eigen::VectorXd& f,
                              const WalkConfig& cfg, unsigned workers) {
    if (f.size() != static_cast<Eigen::Index>(s.size())) throw Error("vector size does not match subset");
    if (s.empty()) throw Error("empty subset");
    const auto split = SignedSplit::of(f);
    if (split.norm_plus == 0.0 && split.norm_minus == 0.0) {
        throw DomainError("preference vector is identically zero");
    }

    const auto plus_dist = split.norm_plus > 0.0 ? distribution_of(split.plus)
                                                 : std::discrete_distribution<std::size_t>{};
    const auto minus_dist = split.norm_minus > 0.0 ? distribution_of(split.minus)
                                                   : std::discrete_distribution<std::size_t>{};

    std::vector<Tally> tallies(std::max(1u, workers));
    for (auto& tally : tallies) {
        tally.plus_hits.assign(s.size(), 0);
        tally.minus_hits.assign(s.size(), 0);
    }

    parallel_blocks(cfg.sample_count, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        auto& tally = tallies[w];
        auto plus = plus_dist;
        auto minus = minus_dist;
        for (std::size_t i = begin; i < end; ++i) {
            if (split.norm_plus > 0.0) {
                one_walk(g, s, cfg, plus, substream(cfg.master_seed, StreamPhase::walk_positive, i),
                         tally.plus_hits, tally.counters);
            }
            if (split.norm_minus > 0.0) {
                one_walk(g, s, cfg, minus, substream(cfg.master_seed, StreamPhase::walk_negative, i),
                         tally.minus_hits, tally.counters);
            }
        }
    });

    HkprEstimate out;
    out.rho = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(s.size()));
    const double rounds = static_cast<double>(cfg.sample_count);
    for (std::size_t v = 0; v < s.size(); ++v) {
        std::uint64_t plus = 0;
        std::uint64_t minus = 0;
        for (const auto& tally : tallies) {
            plus += tally.plus_hits[v];
            minus += tally.minus_hits[v];
        }
        out.rho[static_cast<Eigen::Index>(v)] =
            (static_cast<double>(plus) * split.norm_plus - static_cast<double>(minus) * split.norm_minus) /
            rounds;
    }
    for (const auto& tally : tallies) out.counters += tally.counters;
    return out;
}

HkprEstimate approx_dirhkpr(const Graph& g, const VertexSubset& s, double t, const Eigen::VectorXd& f,
                            double epsilon, std::uint64_t master_seed, unsigned workers, double constant) {
    const auto cfg = WalkConfig::make(t, epsilon, g.num_vertices(), CapMode::eps_cap, master_seed, constant);
    return estimate_dirhkpr(g, s, f, cfg, workers);
}

HkprEstimate solver_approx_dirhkpr(const Graph& g, const VertexSubset& s, double t,
                                   const Eigen::VectorXd& f, double epsilon, std::uint64_t master_seed,
                                   unsigned workers, double constant) {
    const auto cfg =
        WalkConfig::make(t, epsilon, g.num_vertices(), CapMode::two_t_cap, master_seed, constant);
    return estimate_dirhkpr(g, s, f, cfg, workers);
}

}  // namespace localhk
