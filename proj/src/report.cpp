#include "localhk/report.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "localhk/error.hpp"
#include "text_io.hpp"

namespace localhk {

namespace {

constexpr const char* kVersionLine = "# format_version=1";
constexpr const char* kVectorHeader = "vertex,value";
constexpr const char* kSweepHeader = "t,l1,max_abs,l1_plus,l1_minus,max_plus,max_minus";

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t begin = 0;
    while (true) {
        const auto comma = s.find(',', begin);
        out.push_back(detail::trim(s.substr(begin, comma - begin)));
        if (comma == std::string_view::npos) break;
        begin = comma + 1;
    }
    return out;
}

// Checks the version and header lines and returns the data rows with their
// line numbers.
std::vector<std::pair<std::string, std::size_t>> read_csv_body(std::istream& in, std::string_view header) {
    std::string raw;
    std::size_t line = 0;
    if (!std::getline(in, raw) || detail::trim(raw) != kVersionLine) {
        throw ParseError("expected '" + std::string(kVersionLine) + "'", 1);
    }
    ++line;
    if (!std::getline(in, raw) || detail::trim(raw) != header) {
        throw ParseError("expected header '" + std::string(header) + "'", 2);
    }
    ++line;
    std::vector<std::pair<std::string, std::size_t>> rows;
    while (std::getline(in, raw)) {
        ++line;
        const auto body = detail::trim(raw);
        if (!body.empty()) rows.emplace_back(std::string(body), line);
    }
    return rows;
}

}  // namespace

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json vector_entries_json(const Graph& g, const VertexSubset& s, const Eigen::VectorXd& x) {
    Json out = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.push_back({{"vertex", g.original_id(s.global_of(i))}, {"value", x[static_cast<Eigen::Index>(i)]}});
    }
    return out;
}

Json schedule_json(const SolverSchedule& schedule, bool restricted_range) {
    return {
        {"gamma", schedule.gamma},
        {"epsilon", schedule.epsilon ? Json(*schedule.epsilon) : Json(nullptr)},
        {"s", schedule.s},
        {"T", schedule.T},
        {"N", schedule.N},
        {"N_floor", schedule.N_floor},
        {"r_outer", schedule.r_outer},
        {"t_prime", finite_or_null(schedule.t_prime)},
        {"seed", schedule.master_seed},
        {"restricted_range", restricted_range},
    };
}

Json solve_report_json(const std::string& command, const SolveReport& report, const BoundaryProblem& problem,
                       const std::optional<OracleCheck>& oracle) {
    Json doc;
    doc["format_version"] = kFormatVersion;
    doc["command"] = command;
    doc["schedule"] = schedule_json(report.schedule, report.restricted_range);

    Json bounds = {
        {"b1_norm2", report.bound_terms.b1_norm2},
        {"b2_norm1", report.bound_terms.b2_norm1},
        {"gamma", report.bound_terms.gamma},
        {"epsilon", report.bound_terms.epsilon},
    };
    if (oracle) {
        bounds["x_exact_norm2"] = oracle->x_exact_norm;
        bounds["x_rie_norm2"] = oracle->x_rie_norm;
        bounds["error"] = oracle->error;
        bounds["local_bound"] = oracle->bounds.local_bound;
        bounds["greens_bound"] = oracle->bounds.greens_bound;
        bounds["local_check"] = oracle->within_local_bound ? "pass" : "fail";
        if (report.schedule.epsilon) bounds["greens_check"] = oracle->within_greens_bound ? "pass" : "fail";
    }
    doc["error_bound"] = std::move(bounds);

    doc["x_hat"] = vector_entries_json(problem.graph(), problem.subset(), report.x_hat);
    doc["counters"] = {
        {"outer_samples", report.sampled_ts.size()},
        {"skipped_samples", report.skipped_samples},
        {"walks_started", report.counters.walks_started},
        {"walk_steps_total", report.walk_steps_total},
        {"aborts", report.counters.aborts},
    };
    doc["elapsed_seconds"] = report.elapsed_seconds;
    return doc;
}

Json exact_report_json(const BoundaryProblem& problem, const DirichletOperator& op, const Eigen::VectorXd& x) {
    Json doc;
    doc["format_version"] = kFormatVersion;
    doc["command"] = "solve-exact";
    doc["s"] = problem.size();
    doc["lambda1"] = op.lambda1();
    doc["b1_norm2"] = problem.b1().norm();
    doc["x_S"] = vector_entries_json(problem.graph(), problem.subset(), x);
    return doc;
}

void write_vector_csv(std::ostream& out, const Graph& g, const VertexSubset& s, const Eigen::VectorXd& x) {
    out << kVersionLine << '\n' << kVectorHeader << '\n';
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << g.original_id(s.global_of(i)) << ',' << format_real(x[static_cast<Eigen::Index>(i)]) << '\n';
    }
}

std::vector<VectorEntry> read_vector_csv(std::istream& in) {
    std::vector<VectorEntry> out;
    for (const auto& [row, line] : read_csv_body(in, kVectorHeader)) {
        const auto cells = split_commas(row);
        if (cells.size() != 2) throw ParseError("expected 2 columns", line);
        out.push_back({detail::parse_label(cells[0], line), detail::parse_real(cells[1], line)});
    }
    return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kVersionLine << '\n' << kSweepHeader << '\n';
    for (const auto& r : rows) {
        out << format_real(r.t) << ',' << format_real(r.l1) << ',' << format_real(r.max_abs) << ','
            << format_real(r.l1_plus) << ',' << format_real(r.l1_minus) << ',' << format_real(r.max_plus) << ','
            << format_real(r.max_minus) << '\n';
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::vector<SweepRow> out;
    for (const auto& [row, line] : read_csv_body(in, kSweepHeader)) {
        const auto cells = split_commas(row);
        if (cells.size() != 7) throw ParseError("expected 7 columns", line);
        SweepRow r;
        r.t = detail::parse_real(cells[0], line);
        r.l1 = detail::parse_real(cells[1], line);
        r.max_abs = detail::parse_real(cells[2], line);
        r.l1_plus = detail::parse_real(cells[3], line);
        r.l1_minus = detail::parse_real(cells[4], line);
        r.max_plus = detail::parse_real(cells[5], line);
        r.max_minus = detail::parse_real(cells[6], line);
        out.push_back(r);
    }
    return out;
}

}  // namespace localhk
