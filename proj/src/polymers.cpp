#include "sqwit/polymers.hpp"

#include <functional>

namespace sqwit {

std::vector<std::vector<double>> run_strict_weak_beta(const PolymerParams& p, long i_max,
                                                      long j_max, Rng& rng) {
    p.validate(true);
    std::vector<std::vector<double>> z(i_max + 1, std::vector<double>(j_max + 1, 1.0));
    for (long j = 1; j <= j_max; ++j)
        for (long i = 1; i <= i_max; ++i) {
            double b = rng.beta(p.X[i - 1] + p.Y[j - 1], p.S - p.Y[j - 1]);
            if (i == 1)
                z[i][j] = z[i][j - 1] * b;
            else if (i <= j)
                z[i][j] = z[i][j - 1] * b + z[i - 1][j - 1] * (1.0 - b);
            else
                z[i][j] = 1.0; // above the strict-weak cone the height vanishes
        }
    return z;
}

std::vector<std::vector<double>> strict_weak_beta_mean(const PolymerParams& p, long i_max,
                                                       long j_max) {
    p.validate(true);
    std::vector<std::vector<double>> m(i_max + 1, std::vector<double>(j_max + 1, 1.0));
    for (long j = 1; j <= j_max; ++j)
        for (long i = 1; i <= i_max; ++i) {
            double eb = (p.X[i - 1] + p.Y[j - 1]) / (p.X[i - 1] + p.S);
            if (i == 1)
                m[i][j] = m[i][j - 1] * eb;
            else if (i <= j)
                m[i][j] = m[i][j - 1] * eb + m[i - 1][j - 1] * (1.0 - eb);
            else
                m[i][j] = 1.0;
        }
    return m;
}

NbbRunResult run_nbb_polymer(const PolymerParams& p, long i_max, long j_max, Rng& rng) {
    p.validate(true);
    NbbRunResult res;
    auto& z = res.z;
    z.assign(i_max + 1, std::vector<double>(j_max + 1, 1.0));
    for (long j = 1; j <= j_max; ++j)
        for (long i = 1; i <= i_max; ++i) {
            double xi = p.X[i - 1], yj = p.Y[j - 1];
            if (i == 1) {
                double b = rng.beta(xi + yj, p.S - yj);
                z[i][j] = z[i][j - 1] / b;
            } else {
                double right = z[i][j - 1], up = z[i - 1][j], diag = z[i - 1][j - 1];
                if (right == up) {
                    ++res.tie_count;
                    z[i][j] = right;
                } else if (right > up) {
                    double ratio = (up - diag) / (right - diag);
                    double w = 1.0 / dist_sample(
                                         DistSpec(NBBDist{2.0 * p.S - 1.0, ratio, xi + yj, p.S - yj}),
                                         rng);
                    z[i][j] = w * right + (1.0 - w) * up;
                } else {
                    double ratio = (right - diag) / (up - diag);
                    double w = 1.0 / dist_sample(
                                         DistSpec(NBBDist{2.0 * p.S - 1.0, ratio, xi + yj, p.S - xi}),
                                         rng);
                    z[i][j] = (1.0 - w) * right + w * up;
                }
            }
            if (!(z[i][j] > 0.0)) res.all_positive = false;
        }
    return res;
}

std::vector<std::vector<double>> log_gamma_recursion(const std::vector<std::vector<double>>& g) {
    const long rows = static_cast<long>(g.size());
    const long cols = rows == 0 ? 0 : static_cast<long>(g[0].size());
    std::vector<std::vector<double>> z(rows + 1, std::vector<double>(cols + 1, 0.0));
    for (long i = 1; i <= rows; ++i)
        for (long j = 1; j <= cols; ++j) {
            if (i == 1 && j == 1)
                z[i][j] = g[0][0];
            else
                z[i][j] = g[i - 1][j - 1] * (z[i - 1][j] + z[i][j - 1]);
        }
    return z;
}

double log_gamma_path_sum(const std::vector<std::vector<double>>& g, long i, long j) {
    // enumerate up-right paths from (1,1) to (i,j)
    std::function<double(long, long)> rec = [&](long a, long b) -> double {
        double w = g[a - 1][b - 1];
        if (a == 1 && b == 1) return w;
        double acc = 0.0;
        if (a > 1) acc += rec(a - 1, b);
        if (b > 1) acc += rec(a, b - 1);
        return w * acc;
    };
    return rec(i, j);
}

std::vector<std::vector<double>> sample_log_gamma_weights(const std::vector<double>& X,
                                                          const std::vector<double>& Y, Rng& rng) {
    std::vector<std::vector<double>> g(X.size(), std::vector<double>(Y.size()));
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < Y.size(); ++j) {
            if (!(X[i] + Y[j] > 0.0)) throw DomainError("log-gamma: need X_i + Y_j > 0");
            g[i][j] = 1.0 / rng.gamma(X[i] + Y[j]);
        }
    return g;
}

} // namespace sqwit
