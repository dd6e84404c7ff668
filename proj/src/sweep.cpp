#include "localhk/sweep.hpp"

#include <cmath>

#include "localhk/error.hpp"
#include "localhk/walk.hpp"

namespace localhk {

std::vector<double> log_grid(double t_max, std::size_t points) {
    if (!(t_max >= 1.0) || !std::isfinite(t_max)) throw DomainError("sweep needs a finite horizon >= 1");
    if (points < 2) throw DomainError("sweep needs at least two grid points");
    std::vector<double> ts(points);
    const double top = std::log(t_max);
    for (std::size_t i = 0; i < points; ++i) {
        ts[i] = std::exp(top * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    ts.front() = 1.0;
    ts.back() = t_max;
    return ts;
}

std::vector<SweepRow> sweep_norms(const DirichletOperator& op, const Eigen::VectorXd& f, double t_max,
                                  std::size_t points) {
    const auto split = SignedSplit::of(f);
    std::vector<SweepRow> rows;
    for (const double t : log_grid(t_max, points)) {
        const auto plus = exact_dirhkpr(op, t, split.plus);
        const auto minus = exact_dirhkpr(op, t, split.minus);
        const auto full = exact_dirhkpr(op, t, f);
        SweepRow row;
        row.t = t;
        row.l1 = full.lpNorm<1>();
        row.max_abs = full.lpNorm<Eigen::Infinity>();
        row.l1_plus = plus.lpNorm<1>();
        row.l1_minus = minus.lpNorm<1>();
        row.max_plus = plus.lpNorm<Eigen::Infinity>();
        row.max_minus = minus.lpNorm<Eigen::Infinity>();
        rows.push_back(row);
    }
    return rows;
}

std::optional<double> first_crossing(const std::vector<SweepRow>& rows, double threshold) {
    for (const auto& row : rows) {
        if (row.max_abs < threshold) return row.t;
    }
    return std::nullopt;
}

}  // namespace localhk
