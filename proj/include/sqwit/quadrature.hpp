#pragma once

#include <vector>

namespace sqwit {

struct JacobiRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Jacobi rule on [0,1] for the weight (1-t)^alpha t^beta:
///   sum_i w_i f(t_i) ~ int_0^1 (1-t)^alpha t^beta f(t) dt, alpha, beta > -1.
JacobiRule gauss_jacobi_01(int n, double alpha, double beta);

} // namespace sqwit
