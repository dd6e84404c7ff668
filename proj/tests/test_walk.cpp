#include <doctest.h>

#include <cmath>

#include "localhk/dirichlet.hpp"
#include "localhk/walk.hpp"
#include "support.hpp"

using namespace localhk;
using namespace testing;

TEST_CASE("WalkConfig sample count and caps") {
    const auto cfg = WalkConfig::make(3.7, 0.3, 62, CapMode::eps_cap, 1);
    CHECK(cfg.sample_count == static_cast<std::uint64_t>(std::ceil(16.0 / 0.027 * std::log(62.0))));
    CHECK(cfg.cap() == 12);
    CHECK(WalkConfig::make(3.7, 0.3, 62, CapMode::two_t_cap, 1).cap() == 7);
    CHECK(WalkConfig::make(3.7, 0.3, 62, CapMode::uncapped, 1).cap() == UINT64_MAX);
    CHECK(WalkConfig::make(1.0, 0.5, 1, CapMode::eps_cap, 1).sample_count == 1);
    CHECK(WalkConfig::make(1.0, 0.5, 3, CapMode::eps_cap, 1, 2.0).sample_count ==
          static_cast<std::uint64_t>(std::ceil(16.0 * std::log(3.0))));
    CHECK_THROWS_AS(WalkConfig::make(1.0, 1.0, 3, CapMode::eps_cap, 1), DomainError);
    CHECK_THROWS_AS(WalkConfig::make(-1.0, 0.5, 3, CapMode::eps_cap, 1), DomainError);
}

TEST_CASE("SignedSplit") {
    const Eigen::Vector3d f(1.5, -2.0, 0.0);
    const auto split = SignedSplit::of(f);
    CHECK(((split.plus - split.minus).array() == f.array()).all());
    CHECK((split.plus.array() * split.minus.array() == 0.0).all());
    CHECK(split.norm_plus == 1.5);
    CHECK(split.norm_minus == 2.0);
}

TEST_CASE("Poisson sampler moments") {
    CounterStream rng(99);
    for (int i = 0; i < 100; ++i) CHECK(sample_poisson(0.0, rng) == 0);
    const int n = 1000000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double k = static_cast<double>(sample_poisson(5.0, rng));
        sum += k;
        sq += k * k;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(std::abs(mean - 5.0) < 0.02);
    CHECK(std::abs(var - 5.0) < 0.05);
}

TEST_CASE("dirichlet_walk examples") {
    const auto g4 = p4();
    const VertexSubset s4(4, {1, 2});
    CounterStream rng(1);
    CHECK(*dirichlet_walk(g4, s4, 1, 0, rng) == 1);
    CHECK_THROWS_AS(dirichlet_walk(g4, s4, 0, 1, rng), std::invalid_argument);

    const auto g3 = p3();
    const VertexSubset s3(3, {1});
    for (std::uint64_t k = 1; k < 5; ++k) CHECK_FALSE(dirichlet_walk(g3, s3, 1, k, rng).has_value());

    const int trials = 100000;
    int reached = 0;
    WalkCounters counters;
    for (int i = 0; i < trials; ++i) {
        if (const auto end = dirichlet_walk(g4, s4, 1, 1, rng, &counters)) {
            CHECK(*end == 2);
            ++reached;
        }
    }
    CHECK(std::abs(double(reached) / trials - 0.5) < 0.01);
    CHECK(counters.steps_simulated == trials);
    CHECK(counters.aborts == std::uint64_t(trials - reached));
}

TEST_CASE("approx_dirhkpr identity limit, signed input and zero input") {
    const auto g = p4();
    const VertexSubset s(4, {1, 2});
    const auto unit = approx_dirhkpr(g, s, 1e-12, Eigen::Vector2d(1.0, 0.0), 0.3, 4);
    CHECK(unit.rho[0] == 1.0);
    CHECK(unit.rho[1] == 0.0);
    CHECK(unit.counters.steps_simulated == 0);

    const auto signed_rho = approx_dirhkpr(g, s, 1e-12, Eigen::Vector2d(1.0, -1.0), 0.3, 4);
    CHECK(signed_rho.rho[0] == 1.0);
    CHECK(signed_rho.rho[1] == -1.0);

    CHECK_THROWS_AS(approx_dirhkpr(g, s, 1.0, Eigen::Vector2d::Zero(), 0.3, 4), DomainError);
    const auto only_neg = approx_dirhkpr(g, s, 1e-12, Eigen::Vector2d(0.0, -2.0), 0.3, 4);
    CHECK(only_neg.rho[1] == -2.0);
}

TEST_CASE("approx_dirhkpr statistics on the P3 singleton") {
    const auto g = p3();
    const VertexSubset s(3, {1});
    const Eigen::VectorXd f = Eigen::VectorXd::Ones(1);
    const double eps = 0.3;
    int good = 0;
    int good_solver = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const double a = approx_dirhkpr(g, s, std::log(2.0), f, eps, seed).rho[0];
        if (std::abs(a - 0.5) <= eps * 0.5) ++good;
        const double b = solver_approx_dirhkpr(g, s, 1.0, f, eps, seed).rho[0];
        if (std::abs(b - std::exp(-1.0)) <= eps * std::exp(-1.0)) ++good_solver;
    }
    CHECK(good >= 65);
    CHECK(good_solver >= 65);
}

TEST_CASE("solver variant respects the 2t step budget") {
    const auto g = load_graph(data_path("dolphins.edges"));
    const auto s = load_subset(data_path("dolphins.subset"), g);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(Eigen::Index(s.size()));
    f[0] = 1.0;
    f[3] = -0.5;
    const double t = 3.3;
    const auto cfg = WalkConfig::make(t, 0.3, g.num_vertices(), CapMode::two_t_cap, 5);
    const auto est = estimate_dirhkpr(g, s, f, cfg);
    CHECK(est.counters.walks_started == 2 * cfg.sample_count);
    CHECK(est.counters.steps_simulated <= est.counters.walks_started * 6);
}

TEST_CASE("estimates are identical for any worker count") {
    const auto g = load_graph(data_path("dolphins.edges"));
    const auto s = load_subset(data_path("dolphins.subset"), g);
    Eigen::VectorXd f = Eigen::VectorXd::LinSpaced(Eigen::Index(s.size()), -1.0, 2.0);
    const auto one = approx_dirhkpr(g, s, 4.0, f, 0.4, 77, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        const auto many = approx_dirhkpr(g, s, 4.0, f, 0.4, 77, w);
        CHECK((one.rho.array() == many.rho.array()).all());
        CHECK(one.counters.steps_simulated == many.counters.steps_simulated);
    }
    const auto other = approx_dirhkpr(g, s, 4.0, f, 0.4, 78, 1);
    CHECK_FALSE((one.rho.array() == other.rho.array()).all());
}

TEST_CASE("property: nonnegative input keeps mass bounded") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = random_instance(rng, 3, 12);
        Eigen::VectorXd f(Eigen::Index(inst.subset.size()));
        for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = unit(rng);
        const auto est = approx_dirhkpr(inst.graph, inst.subset, 5.0 * unit(rng), f, 0.5, trial);
        CHECK(est.rho.minCoeff() >= 0.0);
        CHECK(est.rho.sum() <= f.sum() * (1 + 1e-12));
    }
}

TEST_CASE("property: uncapped estimator is unbiased") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 4; ++trial) {
        const auto inst = random_instance(rng, 4, 8, 4);
        const DirichletOperator op(inst.graph, inst.subset);
        const auto s = Eigen::Index(inst.subset.size());
        Eigen::VectorXd f = Eigen::VectorXd::LinSpaced(s, 1.0, -0.5);
        if (s == 1) f[0] = 0.8;
        const double t = 1.5;
        const auto exact = exact_dirhkpr(op, t, f);
        const int seeds = 200;
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(s);
        Eigen::VectorXd sq = Eigen::VectorXd::Zero(s);
        for (int seed = 0; seed < seeds; ++seed) {
            const auto cfg = WalkConfig::make(t, 0.5, inst.graph.num_vertices(), CapMode::uncapped, seed);
            const auto rho = estimate_dirhkpr(inst.graph, inst.subset, f, cfg).rho;
            sum += rho;
            sq += rho.cwiseProduct(rho);
        }
        const Eigen::VectorXd mean = sum / seeds;
        const Eigen::VectorXd var = (sq / seeds - mean.cwiseProduct(mean)) * (double(seeds) / (seeds - 1));
        for (Eigen::Index i = 0; i < s; ++i) {
            const double se = std::sqrt(var[i] / seeds);
            CHECK(std::abs(mean[i] - exact[i]) <= 3.0 * se + 1e-12);
        }
    }
}

TEST_CASE("Definition clauses on the dolphins fixture") {
    const auto g = load_graph(data_path("dolphins.edges"));
    const auto s = load_subset(data_path("dolphins.subset"), g);
    const DirichletOperator op(g, s);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(Eigen::Index(s.size()));
    f[2] = 1.0;
    const double t = 2.0;
    const double eps = 0.3;
    const auto exact = exact_dirhkpr(op, t, f);
    int runs_ok = 0;
    const int runs = 40;
    for (int seed = 0; seed < runs; ++seed) {
        const auto rho = approx_dirhkpr(g, s, t, f, eps, seed).rho;
        bool ok = true;
        for (Eigen::Index v = 0; v < rho.size(); ++v) {
            if (exact[v] > eps && std::abs(rho[v] - exact[v]) > eps * exact[v]) ok = false;
            if (rho[v] == 0.0 && exact[v] > eps) ok = false;
        }
        if (ok) ++runs_ok;
    }
    CHECK(runs_ok >= int((1.0 - eps) * runs) - 4);

    // Thresholded exact vectors of a distribution have support at most 1/eps.
    for (double tt : {0.5, 2.0, 8.0}) {
        const auto rho = exact_dirhkpr(op, tt, f);
        CHECK((rho.array() > eps).count() <= std::ceil(1.0 / eps));
    }
}
