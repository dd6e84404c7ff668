#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "localhk/dirichlet.hpp"

namespace localhk {

/// Norms of rho_{S,t,f} at one time, for f and for its positive and
/// negative parts taken separately.
struct SweepRow {
    double t = 0.0;
    double l1 = 0.0;
    double max_abs = 0.0;
    double l1_plus = 0.0;
    double l1_minus = 0.0;
    double max_plus = 0.0;
    double max_minus = 0.0;
};

/// `points` log-spaced times from 1 to `t_max` inclusive.
std::vector<double> log_grid(double t_max, std::size_t points);

/// Exact pagerank norms over log_grid(t_max, points). Throws `CapacityError`
/// through the operator for oversized subsets.
std::vector<SweepRow> sweep_norms(const DirichletOperator& op, const Eigen::VectorXd& f, double t_max,
                                  std::size_t points);

/// First grid time whose max_abs column is below `threshold`.
std::optional<double> first_crossing(const std::vector<SweepRow>& rows, double threshold);

}  // namespace localhk
