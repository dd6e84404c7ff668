#pragma once

#include <cstddef>
#include <iosfwd>

#include <Eigen/Dense>

#include "localhk/boundary.hpp"
#include "localhk/graph.hpp"

namespace localhk {

/// Largest subset handled by the dense code paths.
inline constexpr std::size_t kMaxDenseSize = 4096;

/// Eigenvalues at or below this are treated as singular.
inline constexpr double kSingularFloor = 1e-12;

/// Dense restriction of the normalized Laplacian and the random-walk
/// transition matrix to a connected subset S with nonempty vertex boundary,
/// together with the symmetric eigendecomposition of the Laplacian part.
///
/// Degrees are full-graph degrees, so rows of the transition matrix sum to
/// d_v^S / d_v <= 1 and every eigenvalue lies in (0, 2].
class DirichletOperator {
public:
    /// Throws `ValidationError` (condition 3) when S is disconnected or has no
    /// boundary, `CapacityError` when |S| exceeds kMaxDenseSize, and `Error`
    /// when the smallest eigenvalue falls outside [s^-3, 1] (equality only
    /// occurs for s = 1).
    DirichletOperator(const Graph& g, const VertexSubset& s);

    std::size_t size() const noexcept { return static_cast<std::size_t>(laplacian_.rows()); }
    const Eigen::MatrixXd& laplacian() const noexcept { return laplacian_; }
    const Eigen::MatrixXd& transition() const noexcept { return transition_; }
    /// Ascending.
    const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
    /// Orthonormal columns; column i spans the i-th eigenprojection.
    const Eigen::MatrixXd& eigenvectors() const noexcept { return eigenvectors_; }
    const Eigen::VectorXd& degrees() const noexcept { return degrees_; }
    const Eigen::VectorXd& sqrt_degrees() const noexcept { return sqrt_degrees_; }
    double lambda1() const { return eigenvalues_[0]; }

    /// Q diag(weights) Q^T v.
    Eigen::VectorXd spectral_apply(const Eigen::VectorXd& weights, const Eigen::VectorXd& v) const;

private:
    Eigen::MatrixXd laplacian_;
    Eigen::MatrixXd transition_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
    Eigen::VectorXd degrees_;
    Eigen::VectorXd sqrt_degrees_;
};

/// Inverse of the restricted Laplacian, assembled from the spectrum.
class GreensFunction {
public:
    /// Throws `SingularityError` if any eigenvalue is <= kSingularFloor.
    explicit GreensFunction(const DirichletOperator& op);

    const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
    /// Spectral norm, i.e. 1 / lambda_1.
    double norm() const noexcept { return norm_; }

private:
    Eigen::MatrixXd matrix_;
    double norm_ = 0.0;
};

inline GreensFunction greens_function(const DirichletOperator& op) { return GreensFunction(op); }

/// Exact Dirichlet heat kernel pagerank f^T exp(-t Delta_S), computed as
/// f^T D^{-1/2} exp(-t L_S) D^{1/2}. f may have any sign. t == 0 returns f
/// unchanged; t < 0 throws `DomainError`.
Eigen::VectorXd exact_dirhkpr(const DirichletOperator& op, double t, const Eigen::VectorXd& f);

/// Symmetric kernel exp(-t L_S) v.
Eigen::VectorXd heat_kernel_apply(const DirichletOperator& op, double t, const Eigen::VectorXd& v);

/// x_S = G b1.
Eigen::VectorXd exact_local_solution(const BoundaryProblem& problem, const DirichletOperator& op);
Eigen::VectorXd exact_local_solution(const BoundaryProblem& problem);

/// Row-major CSV, 17 significant digits, no header.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);

}  // namespace localhk
