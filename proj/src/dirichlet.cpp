#include "localhk/dirichlet.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "localhk/error.hpp"

namespace localhk {

DirichletOperator::DirichletOperator(const Graph& g, const VertexSubset& s) {
    if (s.size() > kMaxDenseSize) {
        throw CapacityError("subset of size " + std::to_string(s.size()) +
                            " exceeds the dense limit of " + std::to_string(kMaxDenseSize));
    }
    if (!is_connected_induced(g, s)) {
        throw ValidationError({{3, "violation (iii): the induced subgraph on S is not connected"}});
    }
    if (vertex_boundary(g, s).empty()) {
        throw ValidationError({{3, "violation (iii): S has an empty vertex boundary"}});
    }

    const auto n = static_cast<Eigen::Index>(s.size());
    degrees_.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        degrees_[i] = static_cast<double>(g.degree(s.global_of(static_cast<std::size_t>(i))));
    }
    sqrt_degrees_ = degrees_.cwiseSqrt();

    laplacian_ = Eigen::MatrixXd::Identity(n, n);
    transition_ = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (const auto u : g.neighbors(s.global_of(static_cast<std::size_t>(i)))) {
            const auto j = s.local_of(u);
            if (!j) continue;
            const auto col = static_cast<Eigen::Index>(*j);
            laplacian_(i, col) = -1.0 / (sqrt_degrees_[i] * sqrt_degrees_[col]);
            transition_(i, col) = 1.0 / degrees_[i];
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian_);
    if (solver.info() != Eigen::Success) throw Error("eigendecomposition of the restricted Laplacian failed");
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();

    const double s3 = std::pow(static_cast<double>(n), -3.0);
    const double lambda1 = eigenvalues_[0];
    constexpr double slack = 1e-12;
    // A singleton has L_S = [1], so s = 1 meets the lower bound with equality.
    if (!(lambda1 >= s3 * (1.0 - slack)) || lambda1 > 1.0 + slack || eigenvalues_[n - 1] > 2.0 + slack) {
        std::ostringstream msg;
        msg << std::setprecision(17) << "Dirichlet spectrum out of range: lambda_1 = " << lambda1
            << ", lambda_s = " << eigenvalues_[n - 1] << ", s^-3 = " << s3;
        throw Error(msg.str());
    }
}

Eigen::VectorXd DirichletOperator::spectral_apply(const Eigen::VectorXd& weights,
                                                  const Eigen::VectorXd& v) const {
    Eigen::VectorXd coeffs = eigenvectors_.transpose() * v;
    coeffs.array() *= weights.array();
    return eigenvectors_ * coeffs;
}

GreensFunction::GreensFunction(const DirichletOperator& op) {
    const auto& lambda = op.eigenvalues();
    if (lambda.minCoeff() <= kSingularFloor) throw SingularityError("restricted Laplacian is singular");
    const auto& q = op.eigenvectors();
    matrix_ = q * lambda.cwiseInverse().asDiagonal() * q.transpose();
    norm_ = 1.0 / lambda[0];
}

Eigen::VectorXd heat_kernel_apply(const DirichletOperator& op, double t, const Eigen::VectorXd& v) {
    if (!(t >= 0.0)) throw DomainError("heat kernel time must be non-negative");
    if (t == 0.0) return v;
    const Eigen::VectorXd weights = (-t * op.eigenvalues().array()).exp();
    return op.spectral_apply(weights, v);
}

Eigen::VectorXd exact_dirhkpr(const DirichletOperator& op, double t, const Eigen::VectorXd& f) {
    if (f.size() != static_cast<Eigen::Index>(op.size())) throw Error("vector size does not match subset");
    if (!(t >= 0.0)) throw DomainError("heat kernel time must be non-negative");
    if (t == 0.0) return f;
    // rho^T = f^T D^{-1/2} H D^{1/2}, and H is symmetric.
    const Eigen::VectorXd scaled = f.cwiseQuotient(op.sqrt_degrees());
    return heat_kernel_apply(op, t, scaled).cwiseProduct(op.sqrt_degrees());
}

Eigen::VectorXd exact_local_solution(const BoundaryProblem& problem, const DirichletOperator& op) {
    if (op.eigenvalues().minCoeff() <= kSingularFloor) {
        throw SingularityError("restricted Laplacian is singular");
    }
    return op.spectral_apply(op.eigenvalues().cwiseInverse(), problem.b1());
}

Eigen::VectorXd exact_local_solution(const BoundaryProblem& problem) {
    return exact_local_solution(problem, DirichletOperator(problem.graph(), problem.subset()));
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m) {
    std::ostringstream buf;
    buf << std::setprecision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) buf << ',';
            buf << m(i, j);
        }
        buf << '\n';
    }
    out << buf.str();
}

}  // namespace localhk
