#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "localhk/boundary.hpp"
#include "localhk/dirichlet.hpp"
#include "localhk/error.hpp"
#include "localhk/graph.hpp"
#include "localhk/report.hpp"
#include "localhk/schedule.hpp"
#include "localhk/solvers.hpp"
#include "localhk/sweep.hpp"
#include "localhk/walk.hpp"

namespace localhk::cli {

namespace {

struct Inputs {
    Graph graph;
    VertexSubset subset;
    std::optional<SparseVector> b;
};

Inputs load_inputs(const RunConfig& cfg, bool need_boundary) {
    Inputs in;
    in.graph = load_graph(cfg.graph_path);
    spdlog::info("graph: {} vertices, {} edges", in.graph.num_vertices(), in.graph.num_edges());
    in.subset = load_subset(cfg.subset_path, in.graph);
    spdlog::info("subset: {} vertices", in.subset.size());
    if (need_boundary || !cfg.boundary_path.empty()) in.b = load_boundary(cfg.boundary_path, in.graph);
    return in;
}

double require(const std::optional<double>& v, const char* flag) {
    if (!v) throw ScheduleError(std::string("missing required option ") + flag);
    return *v;
}

// Writes via `fn(stream)` to the output file, or to `out` when none is set.
template <class Fn>
void emit(const RunConfig& cfg, std::ostream& out, Fn&& fn) {
    if (!cfg.output_path) {
        fn(out);
        out.flush();
        return;
    }
    std::ofstream file(*cfg.output_path);
    if (!file) throw Error("cannot open " + cfg.output_path->string() + " for writing");
    fn(file);
    if (!file) throw Error("failed writing " + cfg.output_path->string());
    spdlog::info("wrote {}", cfg.output_path->string());
}

void emit_json(const RunConfig& cfg, std::ostream& out, const Json& doc) {
    emit(cfg, out, [&](std::ostream& o) { o << doc.dump(2) << '\n'; });
}

// Preference vector for hkpr-*: the --pref file on S, else b2.
Eigen::VectorXd preference(const RunConfig& cfg, const Inputs& in) {
    if (cfg.pref_path) {
        const auto values = load_boundary(*cfg.pref_path, in.graph);
        Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(in.subset.size()));
        for (const auto& [v, x] : values) {
            const auto local = in.subset.local_of(v);
            if (!local) {
                throw DomainError("preference entry on vertex " + std::to_string(in.graph.original_id(v)) +
                                  " outside the subset");
            }
            f[static_cast<Eigen::Index>(*local)] = x;
        }
        return f;
    }
    if (!in.b) throw ScheduleError("hkpr commands need --boundary or --pref");
    return BoundaryProblem::make(in.graph, *in.b, in.subset).b2();
}

int do_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto in = load_inputs(cfg, true);
    const auto v = validate_b_boundable(in.graph, *in.b, in.subset);
    if (!v.ok()) {
        for (const auto& violation : v.violations) err << violation.message << '\n';
        return kExitValidation;
    }
    out << "ok: subset of " << in.subset.size() << " vertices is b-boundable, |delta(S)| = " << v.delta.size()
        << ", |partial(S)| = " << v.partial.size() << '\n';
    return kExitOk;
}

int do_solve_exact(const RunConfig& cfg, std::ostream& out) {
    const auto in = load_inputs(cfg, true);
    const auto problem = BoundaryProblem::make(in.graph, *in.b, in.subset);
    const DirichletOperator op(in.graph, in.subset);
    spdlog::info("lambda_1 = {}", op.lambda1());
    emit_json(cfg, out, exact_report_json(problem, op, exact_local_solution(problem, op)));
    return kExitOk;
}

int do_solve_local(const RunConfig& cfg, std::ostream& out) {
    const auto in = load_inputs(cfg, true);
    const auto problem = BoundaryProblem::make(in.graph, *in.b, in.subset);
    const DirichletOperator op(in.graph, in.subset);
    const auto schedule = make_schedule(problem.size(), require(cfg.gamma, "--gamma"), cfg.epsilon, cfg.seed);
    spdlog::info("T = {}, r = {}", schedule.T, schedule.r_outer);
    const auto report = local_linear_solver(problem, op, schedule, cfg.workers);
    const auto check = check_against_oracle(report, problem, op);
    spdlog::info("error {} vs local bound {}", check.error, check.bounds.local_bound);
    emit_json(cfg, out, solve_report_json("solve-local", report, problem, check));
    return kExitOk;
}

int do_solve_greens(const RunConfig& cfg, std::ostream& out) {
    const auto in = load_inputs(cfg, true);
    const auto problem = BoundaryProblem::make(in.graph, *in.b, in.subset);
    const double gamma = require(cfg.gamma, "--gamma");
    const double eps = require(cfg.epsilon, "--eps");

    std::optional<DirichletOperator> op;
    if (problem.size() <= kMaxDenseSize) op.emplace(in.graph, in.subset);
    std::optional<double> lambda1;
    if (cfg.restricted_range) {
        if (op) {
            lambda1 = op->lambda1();
        } else {
            lambda1 = estimate_lambda1(in.graph, in.subset);
            spdlog::info("lambda_1 estimated by power iteration: {}", *lambda1);
        }
    }
    const auto schedule = make_schedule(problem.size(), gamma, eps, cfg.seed, lambda1);
    spdlog::info("T = {}, r = {}, t' = {}", schedule.T, schedule.r_outer, schedule.t_prime);

    SolverOptions options;
    options.workers = cfg.workers;
    options.restricted_range = cfg.restricted_range;
    if (cfg.constant_override) options.walk_constant = *cfg.constant_override;
    const auto report = greens_solver(problem, schedule, options);
    spdlog::info("{} walk steps, {} samples skipped", report.walk_steps_total, report.skipped_samples);

    std::optional<OracleCheck> check;
    if (op) {
        check = check_against_oracle(report, problem, *op);
        spdlog::info("error {} vs bound {}", check->error, check->bounds.greens_bound);
    } else {
        spdlog::warn("subset too large for the exact oracle; bound check omitted");
    }
    emit_json(cfg, out, solve_report_json("solve-greens", report, problem, check));
    return kExitOk;
}

int do_hkpr(const RunConfig& cfg, std::ostream& out, bool approx) {
    const auto in = load_inputs(cfg, false);
    const auto f = preference(cfg, in);
    const double t = require(cfg.t, "--t");
    Eigen::VectorXd rho;
    if (approx) {
        const auto est = approx_dirhkpr(in.graph, in.subset, t, f, require(cfg.epsilon, "--eps"), cfg.seed,
                                        cfg.workers, cfg.constant_override.value_or(kDefaultWalkConstant));
        spdlog::info("{} walks, {} steps, {} aborted", est.counters.walks_started, est.counters.steps_simulated,
                     est.counters.aborts);
        rho = est.rho;
    } else {
        const DirichletOperator op(in.graph, in.subset);
        rho = exact_dirhkpr(op, t, f);
    }
    emit(cfg, out, [&](std::ostream& o) { write_vector_csv(o, in.graph, in.subset, rho); });
    return kExitOk;
}

int do_sweep(const RunConfig& cfg, std::ostream& out) {
    const auto in = load_inputs(cfg, false);
    const auto f = preference(cfg, in);
    const DirichletOperator op(in.graph, in.subset);
    double t_max = 0.0;
    if (cfg.t_max) {
        t_max = *cfg.t_max;
    } else {
        t_max = make_schedule(in.subset.size(), require(cfg.gamma, "--gamma or --t-max"), std::nullopt, cfg.seed).T;
    }
    const auto rows = sweep_norms(op, f, t_max, cfg.points);
    if (const auto t0 = first_crossing(rows, 0.01)) {
        spdlog::info("max entry below 0.01 from t0 = {} (t' = {})", *t0, restricted_threshold(op.lambda1(), 0.01));
    }
    emit(cfg, out, [&](std::ostream& o) { write_sweep_csv(o, rows); });
    return kExitOk;
}

}  // namespace

std::string command_name(Command c) {
    switch (c) {
        case Command::solve_exact: return "solve-exact";
        case Command::solve_local: return "solve-local";
        case Command::solve_greens: return "solve-greens";
        case Command::hkpr_exact: return "hkpr-exact";
        case Command::hkpr_approx: return "hkpr-approx";
        case Command::sweep_norms: return "sweep-norms";
        case Command::validate: return "validate";
    }
    return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::validate: return do_validate(config, out, err);
            case Command::solve_exact: return do_solve_exact(config, out);
            case Command::solve_local: return do_solve_local(config, out);
            case Command::solve_greens: return do_solve_greens(config, out);
            case Command::hkpr_exact: return do_hkpr(config, out, false);
            case Command::hkpr_approx: return do_hkpr(config, out, true);
            case Command::sweep_norms: return do_sweep(config, out);
        }
    } catch (const ValidationError& e) {
        for (const auto& v : e.violations()) err << v.message << '\n';
        return kExitValidation;
    } catch (const ScheduleError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    configure_logging();
    CLI::App app{"Local Laplacian solver with boundary conditions, via Dirichlet heat kernel pagerank"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::vector<std::pair<Command, std::string>> commands = {
        {Command::solve_exact, "Exact local solution x_S = G b1"},
        {Command::solve_local, "Local linear solver with exact pagerank samples"},
        {Command::solve_greens, "Green's solver with Monte-Carlo pagerank samples"},
        {Command::hkpr_exact, "Exact Dirichlet heat kernel pagerank vector (CSV)"},
        {Command::hkpr_approx, "Monte-Carlo Dirichlet heat kernel pagerank vector (CSV)"},
        {Command::sweep_norms, "Pagerank norms over a log-spaced t grid (CSV)"},
        {Command::validate, "Check that the subset is b-boundable"},
    };
    std::string boundary;
    std::string pref;
    std::string output;
    for (const auto& [command, help] : commands) {
        auto* sub = app.add_subcommand(command_name(command), help);
        sub->callback([&cfg, command = command] { cfg.command = command; });
        sub->add_option("--graph", cfg.graph_path, "Edge list, one 'u v' pair per line")->required();
        sub->add_option("--subset", cfg.subset_path, "Subset S, one vertex id per line")->required();
        auto* b = sub->add_option("--boundary", boundary, "Boundary vector b, 'id value' per line");
        const bool hkpr = command == Command::hkpr_exact || command == Command::hkpr_approx ||
                          command == Command::sweep_norms;
        if (hkpr) {
            sub->add_option("--pref", pref, "Preference vector on S, 'id value' per line (default b2)");
        } else {
            b->required();
        }
        sub->add_option("--out", output, "Output file (default standard output)");
        if (command == Command::validate || command == Command::solve_exact || command == Command::hkpr_exact) {
            continue;
        }
        if (command != Command::hkpr_approx) sub->add_option("--gamma", cfg.gamma, "Accuracy gamma in (0, 1)");
        if (command == Command::solve_greens || command == Command::hkpr_approx || command == Command::solve_local) {
            sub->add_option("--eps", cfg.epsilon, "Pagerank accuracy epsilon");
        }
        sub->add_option("--seed", cfg.seed, "Master seed");
        sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
        if (command == Command::solve_greens) {
            sub->add_flag("--restricted-range", cfg.restricted_range, "Skip samples with t >= ln(1/eps)/lambda_1");
        }
        if (command == Command::solve_greens || command == Command::hkpr_approx) {
            sub->add_option("--constant-override", cfg.constant_override, "Walk count constant (default 16)");
        }
        if (command == Command::sweep_norms) {
            sub->add_option("--t-max", cfg.t_max, "Horizon (default T of the schedule for --gamma)");
            sub->add_option("--points", cfg.points, "Grid size")->check(CLI::Range(2, 1000000));
        }
    }
    // hkpr-exact and hkpr-approx take the pagerank time.
    for (auto* sub : {app.get_subcommand("hkpr-exact"), app.get_subcommand("hkpr-approx")}) {
        sub->add_option("--t", cfg.t, "Pagerank time t >= 0")->required();
    }
    app.get_subcommand("hkpr-exact")->add_option("--seed", cfg.seed, "Unused; accepted for uniformity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    if (!boundary.empty()) cfg.boundary_path = boundary;
    if (!pref.empty()) cfg.pref_path = pref;
    if (!output.empty()) cfg.output_path = output;
    spdlog::debug("running {}", command_name(cfg.command));
    return run(cfg, out, err);
}

void configure_logging() {
    auto logger = spdlog::get("localhk");
    if (!logger) logger = spdlog::stderr_color_mt("localhk");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    const char* level = std::getenv("SOLVER_LOG");
    const std::string name = level ? level : "error";
    if (name == "debug") {
        spdlog::set_level(spdlog::level::debug);
    } else if (name == "info") {
        spdlog::set_level(spdlog::level::info);
    } else {
        spdlog::set_level(spdlog::level::err);
    }
}

}  // namespace localhk::cli
