#pragma once

#include <utility>
#include <vector>

#include "sqwit/signatures.hpp"

namespace sqwit {

/// Local RSK move (q = s = 0 degeneration of the Yang-Baxter bijectivization):
/// given kappa < lambda, kappa < mu and a seed k >= 0, produces nu > lambda,
/// nu > mu via the toggle formulas
///   nu_1     = k + max(lambda_1, mu_1)
///   nu_{c+1} = max(lambda_{c+1}, mu_{c+1}) + min(lambda_c, mu_c) - kappa_c.
inline Signature rsk_local_move(const Signature& lam, const Signature& mu, const Signature& kappa,
                                long k_seed) {
    if (k_seed < 0) throw DomainError("rsk_local_move: negative seed");
    if (!interlaces(kappa, lam) || !interlaces(kappa, mu))
        throw ShapeError("rsk_local_move: kappa must interlace both lambda and mu");
    const std::size_t n = std::max(lam.size(), mu.size()) + 1;
    std::vector<long> nu(n);
    nu[0] = k_seed + std::max(lam.part(0), mu.part(0));
    for (std::size_t c = 1; c < n; ++c)
        nu[c] = std::max(lam.part(c), mu.part(c)) + std::min(lam.part(c - 1), mu.part(c - 1)) -
                kappa.part(c - 1);
    while (!nu.empty() && nu.back() == 0) nu.pop_back();
    return Signature(std::move(nu));
}

/// Inverse toggle: recovers (kappa, k) from nu.
inline std::pair<Signature, long> rsk_local_move_inverse(const Signature& lam, const Signature& mu,
                                                         const Signature& nu) {
    long k = nu.part(0) - std::max(lam.part(0), mu.part(0));
    if (k < 0) throw ShapeError("rsk_local_move_inverse: nu_1 too small");
    const std::size_t n = std::max(lam.size(), mu.size());
    std::vector<long> kappa(n);
    for (std::size_t c = 0; c < n; ++c)
        kappa[c] = std::max(lam.part(c + 1), mu.part(c + 1)) + std::min(lam.part(c), mu.part(c)) -
                   nu.part(c + 1);
    while (!kappa.empty() && kappa.back() == 0) kappa.pop_back();
    return {Signature(std::move(kappa)), k};
}

/// Fomin growth diagram over a nonnegative integer matrix: cell (i,j) applies
/// the toggle move with seed m(i,j). Returns the shape at the outer corner.
inline Signature rsk_growth_shape(const std::vector<std::vector<long>>& matrix) {
    const std::size_t rows = matrix.size();
    const std::size_t cols = rows == 0 ? 0 : matrix[0].size();
    std::vector<std::vector<Signature>> grid(rows + 1, std::vector<Signature>(cols + 1));
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j)
            grid[i][j] = rsk_local_move(grid[i - 1][j], grid[i][j - 1], grid[i - 1][j - 1],
                                        matrix[i - 1][j - 1]);
    return grid[rows][cols];
}

/// Classical Schensted row-insertion oracle (independent implementation used
/// to cross-check the growth diagram).
Signature schensted_shape(const std::vector<std::vector<long>>& matrix);

} // namespace sqwit
