#include "sqwit/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "sqwit/errors.hpp"

namespace sqwit {

// Golub-Welsch on the Jacobi three-term recurrence, then the affine map from
// [-1,1] with weight (1-x)^a (1+x)^b to [0,1] with weight (1-t)^a t^b.
JacobiRule gauss_jacobi_01(int n, double alpha, double beta) {
    if (n < 1) throw DomainError("gauss_jacobi_01: need at least one node");
    if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("gauss_jacobi_01: exponents <= -1");

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    const double ab = alpha + beta;
    J(0, 0) = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
        J(k, k) = (beta * beta - alpha * alpha) / den;
        double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
        double d2 = (2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0);
        double off = std::sqrt(num / d2);
        J(k, k - 1) = off;
        J(k - 1, k) = off;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J);
    if (solver.info() != Eigen::Success) throw DomainError("gauss_jacobi_01: eigensolver failed");

    // mu0 = int_{-1}^{1} (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
    double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                     std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
    double mu0 = std::exp(log_mu0);

    JacobiRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = solver.eigenvalues()(i);
        double v0 = solver.eigenvectors()(0, i);
        rule.nodes[i] = 0.5 * (1.0 + x);
        rule.weights[i] = mu0 * v0 * v0 / std::pow(2.0, ab + 1.0);
    }
    return rule;
}

} // namespace sqwit
