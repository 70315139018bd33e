#pragma once

#include <vector>

#include "sqwit/distributions.hpp"
#include "sqwit/rng.hpp"

namespace sqwit {

struct PolymerParams {
    double S;
    std::vector<double> X; // X_1..X_I
    std::vector<double> Y; // Y_1..Y_J

    void validate(bool need_sums_positive) const {
        if (!(S > 0.0)) throw DomainError("polymer: S must be positive");
        for (double x : X)
            if (!(std::fabs(x) < S)) throw DomainError("polymer: need |X_i| < S");
        for (double y : Y)
            if (!(std::fabs(y) < S)) throw DomainError("polymer: need |Y_j| < S");
        if (need_sums_positive)
            for (double x : X)
                for (double y : Y)
                    if (!(x + y > 0.0)) throw DomainError("polymer: need X_i + Y_j > 0");
    }
};

/// Strict-weak beta polymer partition function table Z(i,j), 0 <= j <= J,
/// 1 <= i <= I; Z(i,j) = 1 for i > j, Z in (0,1] everywhere.
std::vector<std::vector<double>> run_strict_weak_beta(const PolymerParams& p, long i_max,
                                                      long j_max, Rng& rng);

/// exact expectation recursion for the strict-weak beta polymer
std::vector<std::vector<double>> strict_weak_beta_mean(const PolymerParams& p, long i_max,
                                                       long j_max);

struct NbbRunResult {
    std::vector<std::vector<double>> z; // Ztilde(i,j)
    long tie_count = 0;                 // occurrences of Z(i,j-1) == Z(i-1,j)
    bool all_positive = true;
};

/// Inverse-beta / inverse-NBB polymer-like recursion (the 4phi3 scaling limit).
NbbRunResult run_nbb_polymer(const PolymerParams& p, long i_max, long j_max, Rng& rng);

/// Point-to-point log-gamma polymer by recursion, given the weight table g.
std::vector<std::vector<double>> log_gamma_recursion(const std::vector<std::vector<double>>& g);

/// independent oracle: sum over up-right paths of the products of weights
double log_gamma_path_sum(const std::vector<std::vector<double>>& g, long i, long j);

/// sample an inverse-gamma weight table for the log-gamma polymer
std::vector<std::vector<double>> sample_log_gamma_weights(const std::vector<double>& X,
                                                          const std::vector<double>& Y, Rng& rng);

} // namespace sqwit
